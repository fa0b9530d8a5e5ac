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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jcq {

inline constexpr double kDefaultTailTol = 1e-12;

enum class FieldKind { Coherent, Number };

/// Pure single-mode field in a truncated photon-number basis.
///
/// Amplitudes C_n are kept as log-magnitudes over the retained window
/// [first(), last()] plus a linear phase n * coherent_phase(); C_n is zero
/// outside the window. Immutable once constructed.
class FieldState {
 public:
  FieldKind kind() const { return kind_; }

  std::size_t first() const { return first_; }
  std::size_t last() const { return first_ + log_mag_.size() - 1; }
  std::size_t size() const { return log_mag_.size(); }

  double mean_photon_number() const { return mean_; }
  double coherent_phase() const { return phase_; }
  double tail_mass() const { return tail_mass_; }
  /// Sum of |C_n|^2 over the window, accumulated in ascending n.
  double retained_mass() const { return retained_mass_; }

  bool contains(std::int64_t n) const {
    return n >= static_cast<std::int64_t>(first_) &&
           n <= static_cast<std::int64_t>(last());
  }

  /// log|C_n|; -inf outside the window.
  double log_magnitude(std::int64_t n) const;
  /// |C_n|^2; 0 outside the window (including n < 0).
  double probability(std::int64_t n) const;
  /// C_n; 0 outside the window (including n < 0).
  std::complex<double> amplitude(std::int64_t n) const;
  /// arg C_n = n * coherent_phase() reduced to [0, 2 pi), defined for every
  /// n >= 0 whether or not the window retains it.
  double phase(std::int64_t n) const;

  std::span<const double> log_magnitudes() const { return log_mag_; }
  std::vector<std::complex<double>> amplitudes() const;

 private:
  friend FieldState make_coherent(double, double, double);
  friend FieldState make_number_state(std::size_t);

  FieldState() = default;

  FieldKind kind_ = FieldKind::Coherent;
  std::size_t first_ = 0;
  std::vector<double> log_mag_;
  double mean_ = 0.0;
  double phase_ = 0.0;
  double tail_mass_ = 0.0;
  double retained_mass_ = 0.0;
};

/// Coherent state |alpha>, |alpha|^2 = N, arg(alpha) = phase.
///
/// The retained window is [floor(N - w sqrt N), ceil(N + w sqrt N)] with w
/// grown until the discarded Poisson mass is at most tail_tol. Throws
/// std::invalid_argument for N <= 0 or tail_tol outside (0, 1), and
/// std::domain_error if the window would exceed N + 50 sqrt N + 100.
FieldState make_coherent(double mean_photon_number, double phase,
                         double tail_tol = kDefaultTailTol);

/// Fock state |m>.
FieldState make_number_state(std::size_t m);

/// Largest photon number a coherent window may reach for a given N.
std::size_t coherent_window_cap(double mean_photon_number);

struct MomentVector {
  std::vector<double> values;  // mu_0 .. mu_K
  double mean_photon_number = 0.0;

  double operator[](std::size_t k) const { return values[k]; }
  std::size_t size() const { return values.size(); }
};

/// mu_k = sum_n |C_n|^2 ((n - N)/N)^k over the retained window.
///
/// Truncation error grows like tail_mass * x_edge^k, so high moments at
/// small N need a much tighter tail_tol than the channel does.
MomentVector central_moments_direct(const FieldState& field, int max_order);

/// Central moments of n/N for Poisson(N) from the binomial recursion
/// mu_k = sum_{i=1}^{k-1} C(k-1, i) mu_{k-1-i} / N^i, mu_0 = 1, mu_1 = 0.
MomentVector central_moments_recursive(double mean_photon_number,
                                       int max_order);

}  // namespace jcq
