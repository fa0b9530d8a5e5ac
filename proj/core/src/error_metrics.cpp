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

#include "jcq/error_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jcq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;

void require_rotation_field(const FieldState& field) {
  if (field.kind() != FieldKind::Coherent) {
    throw std::invalid_argument("closed-form error sums need a coherent field");
  }
  if (std::abs(field.coherent_phase() - kRotationPhase) > kAngleTol) {
    throw std::invalid_argument(
        "closed-form error sums assume coherent phase pi/2");
  }
}

void require_positive_mean(double mean) {
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw std::invalid_argument("mean photon number must be positive");
  }
}

// theta0 reduced to [0, pi); R(theta0 + pi)|0> is the same ray.
double reduce_half_turn(double theta0) {
  double r = std::fmod(theta0, kPi);
  if (r < 0.0) r += kPi;
  if (kPi - r < kAngleTol) r = 0.0;
  return r;
}

bool near(double a, double b) { return std::abs(a - b) <= kAngleTol; }

}  // namespace

double error_against_target(const QubitState& rho, double target_altitude) {
  // R(a)|1> = (cos a, -sin a) in the (|1>, |0>) basis.
  const Eigen::Vector2d perp(std::cos(target_altitude),
                             -std::sin(target_altitude));
  return std::clamp(rho.expectation(perp), 0.0, 1.0);
}

double error_rate_exact(const ControlSpec& spec, const KrausSet& kraus) {
  const QubitState out = apply_channel(QubitState::pure(spec.theta0), kraus);
  return error_against_target(out, spec.theta0 + spec.theta);
}

double error_rate_exact(const ControlSpec& spec, const FieldState& field,
                        const PulseSpec& pulse) {
  return error_rate_exact(spec, build_kraus(field, pulse));
}

double p_plus(const FieldState& field, const PulseSpec& pulse) {
  require_rotation_field(field);
  const double mean = field.mean_photon_number();
  const double k = pulse.kappa;
  double sum = 0.0;
  for (std::size_t n = field.first(); n <= field.last(); ++n) {
    const double x = static_cast<double>(n);
    sum += field.probability(static_cast<std::int64_t>(n)) *
           std::sqrt(x / mean) * std::sin(k * std::sqrt(x)) *
           std::cos(k * std::sqrt(x + 1.0));
  }
  return 0.5 * field.retained_mass() - sum;
}

double p_minus(const FieldState& field, const PulseSpec& pulse) {
  require_rotation_field(field);
  const double mean = field.mean_photon_number();
  const double k = pulse.kappa;
  double sum = 0.0;
  for (std::size_t n = field.first(); n <= field.last(); ++n) {
    const double x = static_cast<double>(n);
    sum += field.probability(static_cast<std::int64_t>(n)) *
           std::sqrt(mean / (x + 1.0)) * std::sin(k * std::sqrt(x + 1.0)) *
           std::cos(k * std::sqrt(x));
  }
  return 0.5 * field.retained_mass() - sum;
}

double p_pole(const FieldState& field, const PulseSpec& pulse, Branch branch) {
  return branch == Branch::Plus ? p_plus(field, pulse) : p_minus(field, pulse);
}

double pi_pulse_error(double theta0, const FieldState& field,
                      const PulseSpec& pulse) {
  const double r = reduce_half_turn(theta0);
  const bool ground = near(r, 0.0);
  const bool excited = near(r, kPi / 2);
  const bool diag_plus = near(r, kPi / 4);
  const bool diag_minus = near(r, 3 * kPi / 4);
  if (!(ground || excited || diag_plus || diag_minus)) {
    return error_rate_exact({theta0, kPi / 2}, field, pulse);
  }
  require_rotation_field(field);

  const double mean = field.mean_photon_number();
  const double k = pulse.kappa;
  const double sign = diag_plus ? 1.0 : -1.0;
  double sum = 0.0;
  for (std::size_t n = field.first(); n <= field.last(); ++n) {
    const double x = static_cast<double>(n);
    const double p = field.probability(static_cast<std::int64_t>(n));
    const double cos_n = std::cos(k * std::sqrt(x));
    const double cos_n1 = std::cos(k * std::sqrt(x + 1.0));
    if (ground) {
      sum += p * cos_n * cos_n;
    } else if (excited) {
      sum += p * cos_n1 * cos_n1;
    } else {
      const double t = cos_n + cos_n1 +
                       sign * std::sqrt(mean / (x + 1.0)) *
                           std::sin(k * std::sqrt(x + 1.0)) -
                       sign * std::sqrt(x / mean) * std::sin(k * std::sqrt(x));
      sum += 0.25 * p * t * t;
    }
  }
  return sum;
}

double diagonal_deviation(const FieldState& field, const PulseSpec& pulse,
                          Branch branch) {
  if (field.kind() != FieldKind::Coherent) {
    throw std::invalid_argument("diagonal deviation needs a coherent field");
  }
  const double mean = field.mean_photon_number();
  const double shift = branch == Branch::Plus ? 1.0 : 0.0;
  double sum = 0.0;
  for (std::size_t n = field.first(); n <= field.last(); ++n) {
    const double x = static_cast<double>(n);
    sum += field.probability(static_cast<std::int64_t>(n)) *
           std::cos(2.0 * pulse.vartheta * std::sqrt((x + shift) / mean));
  }
  return std::abs(0.5 * sum);
}

double population_bias(const ControlSpec& spec, const KrausSet& kraus) {
  const QubitState out = apply_channel(QubitState::pure(spec.theta0), kraus);
  const double s = std::sin(spec.theta0 + spec.theta);
  return std::abs(out(kExcited, kExcited).real() - s * s);
}

double asymptotic_p(double vartheta, double mean_photon_number,
                    Branch branch) {
  require_positive_mean(mean_photon_number);
  const double v = vartheta;
  const double s2 = std::sin(2.0 * v);
  const double c2 = std::cos(2.0 * v);
  const double sign = branch == Branch::Plus ? 1.0 : -1.0;
  const double first_order = (1.0 + 4.0 * v * v) * s2 - 2.0 * v * c2 +
                             sign * 4.0 * v * (1.0 - c2);
  return 0.5 * (1.0 - s2) + first_order / (16.0 * mean_photon_number);
}

OptimalAngles optimal_vartheta(double mean_photon_number) {
  require_positive_mean(mean_photon_number);
  const double inv = 1.0 / mean_photon_number;
  OptimalAngles a;
  a.mean_photon_number = mean_photon_number;
  a.fidelity_optimal_plus =
      kPi / 4 - inv * (3.0 * kPi / 32.0 + (kPi + 2.0) / 16.0);
  a.fidelity_optimal_minus =
      kPi / 4 - inv * (3.0 * kPi / 32.0 - (kPi + 2.0) / 16.0);
  a.bias_free_plus = kPi / 4 - kPi * (1.0 + 2.0) * inv / 32.0;
  a.bias_free_minus = kPi / 4 - kPi * (1.0 - 2.0) * inv / 32.0;
  return a;
}

double landscape_asymptote(double midpoint, double theta,
                           double mean_photon_number) {
  require_positive_mean(mean_photon_number);
  const double d = theta - std::cos(2.0 * midpoint) * std::sin(theta);
  return d * d / (4.0 * mean_photon_number);
}

double max_error_asymptote(double theta, double mean_photon_number) {
  return landscape_asymptote(kPi / 2, theta, mean_photon_number);
}

double min_error_asymptote(double theta, double mean_photon_number) {
  return landscape_asymptote(0.0, theta, mean_photon_number);
}

double gea_banacloche_error(double mean_photon_number) {
  require_positive_mean(mean_photon_number);
  return (kPi * kPi + 4.0) / (64.0 * mean_photon_number);
}

double ozawa_bound(double mean_photon_number) {
  require_positive_mean(mean_photon_number);
  return 1.0 / (16.0 * (mean_photon_number + 1.0));
}

Branch branch_for_start(double theta0) {
  const double s = std::sin(theta0);
  return s * s < 0.5 - kAngleTol ? Branch::Minus : Branch::Plus;
}

PulseSpec resolve_pulse(PulseMode mode, const ControlSpec& spec,
                        double mean_photon_number, double explicit_vartheta) {
  require_positive_mean(mean_photon_number);
  double vartheta = spec.theta;
  switch (mode) {
    case PulseMode::QuarterPi:
      break;
    case PulseMode::OptimalFidelity:
    case PulseMode::BiasFree: {
      if (!near(spec.theta, kPi / 4)) {
        throw std::invalid_argument(
            "optimal and bias-free pulse areas are defined for pi/2 pulses "
            "(theta = pi/4) only");
      }
      const OptimalAngles a = optimal_vartheta(mean_photon_number);
      const Branch b = branch_for_start(spec.theta0);
      vartheta = mode == PulseMode::OptimalFidelity ? a.fidelity_optimal(b)
                                                    : a.bias_free(b);
      break;
    }
    case PulseMode::Explicit:
      if (!std::isfinite(explicit_vartheta)) {
        throw std::invalid_argument("explicit pulse mode needs a vartheta");
      }
      vartheta = explicit_vartheta;
      break;
  }
  return PulseSpec::from_vartheta(vartheta, mean_photon_number, mode);
}

ErrorReport evaluate_control(const ControlSpec& spec,
                             double mean_photon_number, PulseMode mode,
                             double tail_tol, double explicit_vartheta) {
  const PulseSpec pulse =
      resolve_pulse(mode, spec, mean_photon_number, explicit_vartheta);
  const FieldState field =
      make_coherent(mean_photon_number, kRotationPhase, tail_tol);
  const KrausSet kraus = build_kraus(field, pulse);

  ErrorReport r;
  r.mean_photon_number = mean_photon_number;
  r.vartheta_used = pulse.vartheta;
  r.exact = error_rate_exact(spec, kraus);
  r.delta = population_bias(spec, kraus);
  r.gea_banacloche = gea_banacloche_error(mean_photon_number);
  r.ozawa_bound = ozawa_bound(mean_photon_number);

  const double start = reduce_half_turn(spec.theta0);
  const bool from_pole = near(start, 0.0) || near(start, kPi / 2);
  if (near(spec.theta, kPi / 4) && from_pole) {
    r.asymptotic = asymptotic_p(pulse.vartheta, mean_photon_number,
                                near(start, 0.0) ? Branch::Minus : Branch::Plus);
  } else {
    r.asymptotic = landscape_asymptote(spec.midpoint_altitude(), spec.theta,
                                       mean_photon_number);
  }
  return r;
}

}  // namespace jcq
