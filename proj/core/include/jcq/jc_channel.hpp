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

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "jcq/fock_field.hpp"
#include "jcq/qubit.hpp"

namespace jcq {

/// How the half pulse area vartheta of a control was chosen.
enum class PulseMode {
  QuarterPi,        // vartheta equals the intended rotation theta
  OptimalFidelity,  // fidelity-optimal correction, pi/2 pulses only
  BiasFree,         // population-bias-free correction, pi/2 pulses only
  Explicit,         // user supplied
};

/// Which pole a pi/2 control starts from: Plus is the excited state, Minus
/// the ground state.
enum class Branch { Plus, Minus };

/// Coupling-time product kappa = g t and the half pulse area
/// vartheta = kappa sqrt(N) it produces against a field of mean N.
struct PulseSpec {
  double kappa = 0.0;
  double vartheta = 0.0;
  PulseMode mode = PulseMode::Explicit;

  static PulseSpec from_vartheta(double vartheta, double mean_photon_number,
                                 PulseMode mode = PulseMode::Explicit);
  static PulseSpec from_kappa(double kappa, double mean_photon_number);
};

/// Photon-number-resolved Kraus operators of the resonant JC propagator:
///
///   M_n = [[ C_n cos(k sqrt(n+1)),   -i C_{n+1} sin(k sqrt(n+1)) ],
///          [ -i C_{n-1} sin(k sqrt n), C_n cos(k sqrt n)         ]]
///
/// The index runs over the field window widened by one on each side, so the
/// only completeness defect is the field's own tail mass.
class KrausSet {
 public:
  std::size_t first_index() const { return first_; }
  std::size_t last_index() const { return first_ + ops_.size() - 1; }
  std::size_t size() const { return ops_.size(); }

  const Matrix2c& op(std::size_t n) const { return ops_.at(n - first_); }
  const std::vector<Matrix2c>& operators() const { return ops_; }

  const PulseSpec& pulse() const { return pulse_; }
  double field_mean() const { return field_mean_; }
  double field_tail_mass() const { return field_tail_; }

  /// sum_n M_n^dagger M_n, accumulated in ascending n.
  Matrix2c completeness() const;
  /// max-entry norm of completeness() - I.
  double completeness_residual() const;

 private:
  friend KrausSet build_kraus(const FieldState&, const PulseSpec&);

  std::size_t first_ = 0;
  std::vector<Matrix2c> ops_;
  PulseSpec pulse_;
  double field_mean_ = 0.0;
  double field_tail_ = 0.0;
};

KrausSet build_kraus(const FieldState& field, const PulseSpec& pulse);

/// sum_n M_n rho M_n^dagger, summed in ascending n.
QubitState apply_channel(const QubitState& rho, const KrausSet& kraus);

/// Max-entry distance between the quantum channel driven by a coherent field
/// of mean N (phase pi/2) and the classical rotation R(vartheta) rho R^T.
double classical_limit_distance(const QubitState& rho0,
                                double mean_photon_number, double vartheta,
                                double tail_tol = kDefaultTailTol);

/// Coherent phase that turns every M_n into a real matrix, so the channel
/// reduces to a rotation in the classical limit.
inline constexpr double kRotationPhase = std::numbers::pi / 2.0;

}  // namespace jcq
