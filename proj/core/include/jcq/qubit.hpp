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

#include <Eigen/Core>
#include <complex>

namespace jcq {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix2r = Eigen::Matrix2d;

// Basis ordering is fixed throughout: index 0 is the excited state |1>,
// index 1 is the ground state |0>.
inline constexpr int kExcited = 0;
inline constexpr int kGround = 1;

/// Single-qubit density matrix.
class QubitState {
 public:
  /// Validates Hermiticity, unit trace and positivity to `tol`; throws
  /// std::invalid_argument otherwise.
  static QubitState from_matrix(const Matrix2c& rho, double tol = 1e-12);
  /// Accepts any matrix; used for channel outputs whose validity is checked
  /// separately.
  static QubitState unchecked(const Matrix2c& rho) { return QubitState(rho); }

  /// Pure state R(theta0)|0> = sin(theta0)|1> + cos(theta0)|0>.
  static QubitState pure(double theta0);
  static QubitState ground() { return pure(0.0); }
  static QubitState excited();
  static QubitState maximally_mixed();

  const Matrix2c& rho() const { return rho_; }
  Complex operator()(int i, int j) const { return rho_(i, j); }

  Complex trace() const { return rho_.trace(); }
  /// Largest |rho - rho^dagger| entry.
  double hermiticity_defect() const;
  /// Eigenvalues of the Hermitian part, ascending.
  Eigen::Vector2d eigenvalues() const;
  bool is_valid(double tol) const;

  /// <psi| rho |psi> for a real two-component state vector.
  double expectation(const Eigen::Vector2d& psi) const;

 private:
  explicit QubitState(const Matrix2c& rho) : rho_(rho) {}
  Matrix2c rho_;
};

/// R(theta) = [[cos, sin], [-sin, cos]]; R(theta)|0> has altitude theta.
Matrix2r bloch_rotation(double vartheta);

/// R(theta)|0> as a vector in the (|1>, |0>) basis.
Eigen::Vector2d bloch_state(double theta);

double max_abs_entry(const Matrix2c& m);

}  // namespace jcq
