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

#include "jcq/qubit.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace jcq {

QubitState QubitState::from_matrix(const Matrix2c& rho, double tol) {
  QubitState s(rho);
  if (!rho.allFinite()) {
    throw std::invalid_argument("density matrix has non-finite entries");
  }
  if (s.hermiticity_defect() > tol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(s.trace() - Complex(1.0, 0.0)) > tol) {
    throw std::invalid_argument("density matrix trace differs from 1");
  }
  if (s.eigenvalues()(0) < -tol) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
  return s;
}

QubitState QubitState::pure(double theta0) {
  const Eigen::Vector2d v = bloch_state(theta0);
  const Eigen::Vector2cd c = v.cast<Complex>();
  return QubitState(c * c.adjoint());
}

QubitState QubitState::excited() {
  Matrix2c rho = Matrix2c::Zero();
  rho(kExcited, kExcited) = 1.0;
  return QubitState(rho);
}

QubitState QubitState::maximally_mixed() {
  return QubitState(Matrix2c::Identity() * 0.5);
}

double QubitState::hermiticity_defect() const {
  return max_abs_entry(rho_ - rho_.adjoint());
}

Eigen::Vector2d QubitState::eigenvalues() const {
  const Matrix2c herm = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix2c> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

bool QubitState::is_valid(double tol) const {
  return rho_.allFinite() && hermiticity_defect() <= tol &&
         std::abs(trace() - Complex(1.0, 0.0)) <= tol &&
         eigenvalues()(0) >= -tol;
}

double QubitState::expectation(const Eigen::Vector2d& psi) const {
  const Eigen::Vector2cd c = psi.cast<Complex>();
  return (c.adjoint() * rho_ * c)(0, 0).real();
}

Matrix2r bloch_rotation(double vartheta) {
  const double c = std::cos(vartheta);
  const double s = std::sin(vartheta);
  Matrix2r r;
  r << c, s, -s, c;
  return r;
}

Eigen::Vector2d bloch_state(double theta) {
  return {std::sin(theta), std::cos(theta)};
}

double max_abs_entry(const Matrix2c& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace jcq
