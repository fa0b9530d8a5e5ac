// Copyright 2026 The jcqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <limits>

#include "jcq/fock_field.hpp"
#include "jcq/jc_channel.hpp"
#include "jcq/qubit.hpp"

namespace jcq {

/// Intended control R(theta0)|0> -> R(theta0 + theta)|0>, qubit phase 0.
struct ControlSpec {
  double theta0 = 0.0;
  double theta = 0.0;

  /// Altitude of the rotation midpoint, Phi = theta0 + theta/2.
  double midpoint_altitude() const { return theta0 + 0.5 * theta; }
  static ControlSpec from_midpoint(double midpoint, double theta) {
    return {midpoint - 0.5 * theta, theta};
  }
};

struct ErrorReport {
  double exact = 0.0;       // 1 - F^2 from the full channel
  double asymptotic = 0.0;  // leading 1/N prediction
  double gea_banacloche = 0.0;
  double ozawa_bound = 0.0;
  double delta = 0.0;  // |rho_excited - target excited population|
  double mean_photon_number = 0.0;
  double vartheta_used = 0.0;
};

struct OptimalAngles {
  double fidelity_optimal_plus = 0.0;
  double fidelity_optimal_minus = 0.0;
  double bias_free_plus = 0.0;
  double bias_free_minus = 0.0;
  double mean_photon_number = 0.0;

  double fidelity_optimal(Branch b) const {
    return b == Branch::Plus ? fidelity_optimal_plus : fidelity_optimal_minus;
  }
  double bias_free(Branch b) const {
    return b == Branch::Plus ? bias_free_plus : bias_free_minus;
  }
};

// --- exact error rates -----------------------------------------------------

/// <psi_perp| Tr_f rho(t) |psi_perp> with psi_perp = R(theta0 + theta)|1>,
/// starting from the pure state R(theta0)|0>.
double error_rate_exact(const ControlSpec& spec, const KrausSet& kraus);
double error_rate_exact(const ControlSpec& spec, const FieldState& field,
                        const PulseSpec& pulse);

/// Error of an arbitrary (possibly mixed) state against the pure target
/// R(target_altitude)|0>.
double error_against_target(const QubitState& rho, double target_altitude);

/// Closed single-sum forms for pi/2 pulses from the poles. Both require a
/// coherent field with phase pi/2.
///   P+ = P(pi/2, pi/4): 1/2 - sum |C_n|^2 sqrt(n/N) sin(k sqrt n) cos(k sqrt(n+1))
///   P- = P(0, pi/4):    1/2 - sum |C_n|^2 sqrt(N/(n+1)) sin(k sqrt(n+1)) cos(k sqrt n)
double p_plus(const FieldState& field, const PulseSpec& pulse);
double p_minus(const FieldState& field, const PulseSpec& pulse);
double p_pole(const FieldState& field, const PulseSpec& pulse, Branch branch);

/// pi-pulse error P(theta0, pi/2). theta0 in {0, pi/4, pi/2, 3pi/4} (mod pi)
/// uses the specialized sums; anything else goes through error_rate_exact.
double pi_pulse_error(double theta0, const FieldState& field,
                      const PulseSpec& pulse);

/// |1/2 sum |C_n|^2 cos(2 vartheta sqrt((n + (1 +- 1)/2) / N))|.
double diagonal_deviation(const FieldState& field, const PulseSpec& pulse,
                          Branch branch);

/// Deviation of the output excited population from sin^2(theta0 + theta).
/// Reduces to diagonal_deviation for pi/2 pulses from the poles.
double population_bias(const ControlSpec& spec, const KrausSet& kraus);

// --- asymptotics and reference curves --------------------------------------

/// (1 - sin 2v)/2 + {(1 + 4v^2) sin 2v - 2v cos 2v +- 4v(1 - cos 2v)} / (16N).
double asymptotic_p(double vartheta, double mean_photon_number, Branch branch);

OptimalAngles optimal_vartheta(double mean_photon_number);

/// (theta - cos(2 Phi) sin(theta))^2 / (4N).
double landscape_asymptote(double midpoint, double theta,
                           double mean_photon_number);
/// (theta + sin theta)^2 / (4N), reached at Phi = pi/2.
double max_error_asymptote(double theta, double mean_photon_number);
/// (theta - sin theta)^2 / (4N), reached at Phi = 0.
double min_error_asymptote(double theta, double mean_photon_number);

/// Semiclassical pi/2-pulse error (pi^2 + 4) / (64 N).
double gea_banacloche_error(double mean_photon_number);
/// Uncertainty-principle bound 1 / (16 (N + 1)).
double ozawa_bound(double mean_photon_number);

// --- pulse selection -------------------------------------------------------

/// Pole a control "starts from" for the purpose of the +/- corrections:
/// Minus when the start is closer to |0> than to |1>, Plus otherwise
/// (equatorial starts count as Plus).
Branch branch_for_start(double theta0);

/// Resolves vartheta for `mode` and builds kappa = vartheta / sqrt(N).
/// OptimalFidelity and BiasFree are only defined for theta = pi/4 and throw
/// std::invalid_argument otherwise; Explicit uses `explicit_vartheta`.
PulseSpec resolve_pulse(PulseMode mode, const ControlSpec& spec,
                        double mean_photon_number,
                        double explicit_vartheta =
                            std::numeric_limits<double>::quiet_NaN());

/// Full report for one control against a fresh coherent field of mean N.
ErrorReport evaluate_control(const ControlSpec& spec,
                             double mean_photon_number, PulseMode mode,
                             double tail_tol = kDefaultTailTol,
                             double explicit_vartheta =
                                 std::numeric_limits<double>::quiet_NaN());

}  // namespace jcq
