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

#include "jcq/fock_field.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "jcq/poisson.hpp"

namespace jcq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Poisson mass strictly above `hi`. Terms decrease monotonically there since
// hi >= N.
double upper_tail(std::size_t hi, double mean) {
  double sum = 0.0;
  for (std::uint64_t n = hi + 1;; ++n) {
    const double term = std::exp(poisson::log_pmf(n, mean));
    sum += term;
    if (term == 0.0 || term <= sum * 1e-18) break;
  }
  return sum;
}

// Poisson mass strictly below `lo`; lo <= N so terms shrink as n decreases.
double lower_tail(std::size_t lo, double mean) {
  double sum = 0.0;
  for (std::uint64_t n = lo; n-- > 0;) {
    const double term = std::exp(poisson::log_pmf(n, mean));
    sum += term;
    if (term == 0.0 || term <= sum * 1e-18) break;
  }
  return sum;
}

}  // namespace

double FieldState::log_magnitude(std::int64_t n) const {
  if (!contains(n)) return -std::numeric_limits<double>::infinity();
  return log_mag_[static_cast<std::size_t>(n) - first_];
}

double FieldState::probability(std::int64_t n) const {
  if (!contains(n)) return 0.0;
  return std::exp(2.0 * log_mag_[static_cast<std::size_t>(n) - first_]);
}

std::complex<double> FieldState::amplitude(std::int64_t n) const {
  if (!contains(n)) return {0.0, 0.0};
  const double mag = std::exp(log_mag_[static_cast<std::size_t>(n) - first_]);
  if (phase_ == 0.0) return {mag, 0.0};
  return std::polar(mag, phase(n));
}

double FieldState::phase(std::int64_t n) const {
  if (phase_ == 0.0) return 0.0;
  // n * phase can reach ~1e6 rad; reduce in extended precision.
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double arg = std::fmod(
      static_cast<long double>(n) * static_cast<long double>(phase_), two_pi);
  if (arg < 0) arg += two_pi;
  return static_cast<double>(arg);
}

std::vector<std::complex<double>> FieldState::amplitudes() const {
  std::vector<std::complex<double>> out;
  out.reserve(size());
  for (std::size_t n = first_; n <= last(); ++n) {
    out.push_back(amplitude(static_cast<std::int64_t>(n)));
  }
  return out;
}

std::size_t coherent_window_cap(double mean_photon_number) {
  return static_cast<std::size_t>(
      std::floor(mean_photon_number + 50.0 * std::sqrt(mean_photon_number) +
                 100.0));
}

FieldState make_coherent(double mean_photon_number, double phase,
                         double tail_tol) {
  const double mean = mean_photon_number;
  if (!std::isfinite(mean) || mean <= 0.0) {
    throw std::invalid_argument("coherent field requires N > 0, got " +
                                std::to_string(mean));
  }
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw std::invalid_argument("tail_tol must lie in (0, 1)");
  }
  if (!std::isfinite(phase)) {
    throw std::invalid_argument("coherent phase must be finite");
  }

  const double root = std::sqrt(mean);
  const std::size_t cap = coherent_window_cap(mean);

  std::size_t lo = 0;
  std::size_t hi = 0;
  double tail = 1.0;
  for (int w = 1;; ++w) {
    const double reach = w * root;
    lo = static_cast<std::size_t>(std::max(0.0, std::floor(mean - reach)));
    const double hi_real = std::ceil(mean + reach);
    const bool capped = hi_real >= static_cast<double>(cap);
    hi = capped ? cap : static_cast<std::size_t>(hi_real);
    tail = lower_tail(lo, mean) + upper_tail(hi, mean);
    if (tail <= tail_tol) break;
    if (capped) {
      throw std::domain_error(
          "tail_tol " + std::to_string(tail_tol) +
          " not reachable within n_max cap " + std::to_string(cap));
    }
  }

  FieldState f;
  f.kind_ = FieldKind::Coherent;
  f.first_ = lo;
  f.mean_ = mean;
  f.phase_ = std::fmod(phase, kTwoPi);
  if (f.phase_ < 0.0) f.phase_ += kTwoPi;
  f.tail_mass_ = tail;
  f.log_mag_.reserve(hi - lo + 1);
  double mass = 0.0;
  for (std::size_t n = lo; n <= hi; ++n) {
    const double lp = poisson::log_pmf(n, mean);
    f.log_mag_.push_back(0.5 * lp);
    mass += std::exp(lp);
  }
  f.retained_mass_ = mass;
  return f;
}

FieldState make_number_state(std::size_t m) {
  FieldState f;
  f.kind_ = FieldKind::Number;
  f.first_ = m;
  f.log_mag_ = {0.0};
  f.mean_ = static_cast<double>(m);
  f.phase_ = 0.0;
  f.tail_mass_ = 0.0;
  f.retained_mass_ = 1.0;
  return f;
}

MomentVector central_moments_direct(const FieldState& field, int max_order) {
  if (max_order < 0) {
    throw std::invalid_argument("moment order must be non-negative");
  }
  if (field.kind() != FieldKind::Coherent) {
    throw std::invalid_argument("central moments need a coherent field");
  }
  const double mean = field.mean_photon_number();
  const auto count = static_cast<std::size_t>(max_order) + 1;
  MomentVector out{std::vector<double>(count, 0.0), mean};
  for (std::size_t n = field.first(); n <= field.last(); ++n) {
    const double p = field.probability(static_cast<std::int64_t>(n));
    const double x = (static_cast<double>(n) - mean) / mean;
    double power = 1.0;
    for (std::size_t k = 0; k < count; ++k) {
      out.values[k] += p * power;
      power *= x;
    }
  }
  return out;
}

MomentVector central_moments_recursive(double mean_photon_number,
                                       int max_order) {
  if (max_order < 0) {
    throw std::invalid_argument("moment order must be non-negative");
  }
  if (!(mean_photon_number > 0.0)) {
    throw std::invalid_argument("moments require N > 0");
  }
  const double inv_n = 1.0 / mean_photon_number;
  const auto count = static_cast<std::size_t>(max_order) + 1;
  MomentVector out{std::vector<double>(count, 0.0), mean_photon_number};
  out.values[0] = 1.0;
  if (count > 1) out.values[1] = 0.0;
  for (std::size_t k = 2; k < count; ++k) {
    // binom(k-1, i) built incrementally; inv_pow = N^{-i}.
    double binom = 1.0;
    double inv_pow = 1.0;
    double sum = 0.0;
    for (std::size_t i = 1; i <= k - 1; ++i) {
      binom = binom * static_cast<double>(k - i) / static_cast<double>(i);
      inv_pow *= inv_n;
      sum += binom * out.values[k - 1 - i] * inv_pow;
    }
    out.values[k] = sum;
  }
  return out;
}

}  // namespace jcq
