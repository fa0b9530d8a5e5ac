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

#include "jcq/jc_channel.hpp"

#include <cmath>
#include <stdexcept>

namespace jcq {

PulseSpec PulseSpec::from_vartheta(double vartheta, double mean_photon_number,
                                   PulseMode mode) {
  if (!std::isfinite(vartheta)) {
    throw std::invalid_argument("vartheta must be finite");
  }
  if (!(mean_photon_number > 0.0)) {
    throw std::invalid_argument("pulse needs a field with N > 0");
  }
  return {vartheta / std::sqrt(mean_photon_number), vartheta, mode};
}

PulseSpec PulseSpec::from_kappa(double kappa, double mean_photon_number) {
  if (!std::isfinite(kappa)) {
    throw std::invalid_argument("kappa must be finite");
  }
  if (mean_photon_number < 0.0) {
    throw std::invalid_argument("mean photon number must be non-negative");
  }
  return {kappa, kappa * std::sqrt(mean_photon_number), PulseMode::Explicit};
}

Matrix2c KrausSet::completeness() const {
  Matrix2c sum = Matrix2c::Zero();
  for (const auto& m : ops_) sum.noalias() += m.adjoint() * m;
  return sum;
}

double KrausSet::completeness_residual() const {
  return max_abs_entry(completeness() - Matrix2c::Identity());
}

KrausSet build_kraus(const FieldState& field, const PulseSpec& pulse) {
  if (!std::isfinite(pulse.kappa)) {
    throw std::invalid_argument("kappa must be finite");
  }
  const Complex minus_i(0.0, -1.0);
  const double kappa = pulse.kappa;

  KrausSet set;
  set.first_ = field.first() == 0 ? 0 : field.first() - 1;
  const std::size_t last = field.last() + 1;
  set.ops_.reserve(last - set.first_ + 1);
  for (std::size_t n = set.first_; n <= last; ++n) {
    const auto i = static_cast<std::int64_t>(n);
    const double root_n = std::sqrt(static_cast<double>(n));
    const double root_n1 = std::sqrt(static_cast<double>(n + 1));
    const Complex c_n = field.amplitude(i);
    Matrix2c m;
    m(kExcited, kExcited) = c_n * std::cos(kappa * root_n1);
    m(kExcited, kGround) = minus_i * field.amplitude(i + 1) *
                           std::sin(kappa * root_n1);
    m(kGround, kExcited) = minus_i * field.amplitude(i - 1) *
                           std::sin(kappa * root_n);
    m(kGround, kGround) = c_n * std::cos(kappa * root_n);
    set.ops_.push_back(m);
  }
  set.pulse_ = pulse;
  set.field_mean_ = field.mean_photon_number();
  set.field_tail_ = field.tail_mass();
  return set;
}

QubitState apply_channel(const QubitState& rho, const KrausSet& kraus) {
  Matrix2c out = Matrix2c::Zero();
  const Matrix2c& r = rho.rho();
  for (const auto& m : kraus.operators()) {
    out.noalias() += m * r * m.adjoint();
  }
  return QubitState::unchecked(out);
}

double classical_limit_distance(const QubitState& rho0,
                                double mean_photon_number, double vartheta,
                                double tail_tol) {
  if (!(mean_photon_number >= 1.0) || !std::isfinite(mean_photon_number)) {
    throw std::invalid_argument("classical limit comparison needs N >= 1");
  }
  const FieldState field =
      make_coherent(mean_photon_number, kRotationPhase, tail_tol);
  const KrausSet kraus = build_kraus(
      field, PulseSpec::from_vartheta(vartheta, mean_photon_number));
  const QubitState quantum = apply_channel(rho0, kraus);
  const Matrix2c rot = bloch_rotation(vartheta).cast<Complex>();
  const Matrix2c classical = rot * rho0.rho() * rot.adjoint();
  return max_abs_entry(quantum.rho() - classical);
}

}  // namespace jcq
