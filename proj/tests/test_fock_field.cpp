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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "jcq/fock_field.hpp"
#include "jcq/poisson.hpp"
#include "oracles.hpp"

using namespace jcq;
constexpr double kPi = std::numbers::pi;

TEST_SUITE("poisson") {
  TEST_CASE("log_pmf matches 30-digit reference values") {
    // mpmath, 30 significant digits.
    CHECK(poisson::log_pmf(1001234, 1e6) ==
          doctest::Approx(-8.5883755279798619252).epsilon(1e-14));
    CHECK(poisson::log_pmf(3, 2.5) ==
          doctest::Approx(-1.5428872736055898053).epsilon(1e-14));
    CHECK(poisson::log_pmf(150, 150.0) ==
          doctest::Approx(-3.4248117349853213559).epsilon(1e-14));
  }

  TEST_CASE("log_pmf agrees with the lgamma route at moderate N") {
    for (double mean : {0.3, 1.0, 7.5, 40.0, 300.0}) {
      for (std::size_t n : {0u, 1u, 2u, 5u, 17u, 60u, 400u}) {
        const double ref = std::log(oracle::naive_poisson_pmf(n, mean));
        if (!std::isfinite(ref)) continue;
        CHECK(poisson::log_pmf(n, mean) == doctest::Approx(ref).epsilon(1e-11));
      }
    }
  }

  TEST_CASE("edge cases") {
    CHECK(poisson::log_pmf(0, 4.0) == -4.0);
    CHECK(poisson::log_pmf(0, 0.0) == 0.0);
    CHECK(poisson::log_pmf(3, 0.0) == -std::numeric_limits<double>::infinity());
    CHECK(poisson::stirling_error(1.0) ==
          doctest::Approx(0.0810614667953272582196702));
  }
}

TEST_SUITE("fock_field") {
  TEST_CASE("coherent N=1 retains Poisson(1) weights") {
    const FieldState f = make_coherent(1.0, 0.0);
    CHECK(f.first() == 0);
    CHECK(f.probability(0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(f.probability(1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(f.amplitude(1).imag() == 0.0);
    CHECK(f.probability(-1) == 0.0);
  }

  TEST_CASE("phase law C_{n+1}/C_n = sqrt(N/(n+1)) e^{i phi}") {
    const FieldState f = make_coherent(100.0, kPi / 2);
    CHECK(f.phase(3) == doctest::Approx(3 * kPi / 2).epsilon(1e-14));
    for (std::size_t n = f.first(); n < f.last(); ++n) {
      const auto i = static_cast<std::int64_t>(n);
      const std::complex<double> ratio = f.amplitude(i + 1) / f.amplitude(i);
      const std::complex<double> expect =
          std::polar(std::sqrt(100.0 / static_cast<double>(n + 1)), kPi / 2);
      CHECK(std::abs(ratio - expect) <= 1e-12 * std::abs(expect));
    }
  }

  TEST_CASE("N=1e4 window keeps all but tail_tol of the mass") {
    const FieldState f = make_coherent(1e4, 0.0, 1e-12);
    double direct = 0.0;
    for (std::size_t n = f.first(); n <= f.last(); ++n) {
      direct += oracle::naive_poisson_pmf(n, 1e4);
    }
    CHECK(direct >= 1.0 - 1e-12);
    CHECK(direct <= 1.0 + 1e-13);
    CHECK(f.retained_mass() >= 1.0 - 1e-12);
    CHECK(f.retained_mass() <= 1.0 + 1e-15);
    CHECK(f.tail_mass() <= 1e-12);
    CHECK(f.first() <= 1e4);
    CHECK(f.last() >= 1e4);
    CHECK(f.last() <= coherent_window_cap(1e4));
  }

  TEST_CASE("N=1e6 stays finite; mode weight matches Stirling") {
    const FieldState f = make_coherent(1e6, kPi / 2);
    double peak = 0.0;
    for (double lm : f.log_magnitudes()) {
      REQUIRE(std::isfinite(lm));
      peak = std::max(peak, std::exp(2 * lm));
    }
    CHECK(std::abs(peak / (1.0 / std::sqrt(2 * kPi * 1e6)) - 1.0) < 0.01);
    CHECK(f.probability(1000000) ==
          doctest::Approx(0.00039894224715624403).epsilon(1e-12));
    CHECK(std::abs(f.retained_mass() - 1.0) <= 1e-12);
  }

  TEST_CASE("normalization property over random N and tolerances") {
    std::mt19937_64 rng(20261014);
    std::uniform_real_distribution<double> log_n(-2.0, 5.0);
    std::uniform_real_distribution<double> log_tol(-15.0, -6.0);
    for (int trial = 0; trial < 60; ++trial) {
      const double mean = std::pow(10.0, log_n(rng));
      const double tol = std::pow(10.0, log_tol(rng));
      const FieldState f = make_coherent(mean, 0.7, tol);
      CAPTURE(mean);
      CAPTURE(tol);
      CHECK(f.tail_mass() <= tol);
      CHECK(std::abs(f.retained_mass() - 1.0) <= tol + 1e-14);
      CHECK(std::abs(f.retained_mass() + f.tail_mass() - 1.0) <= 1e-14);
    }
  }

  TEST_CASE("number states") {
    const FieldState vac = make_number_state(0);
    CHECK(vac.amplitude(0) == std::complex<double>(1.0, 0.0));
    CHECK(vac.amplitude(1) == std::complex<double>(0.0, 0.0));
    const FieldState five = make_number_state(5);
    CHECK(five.mean_photon_number() == 5.0);
    CHECK(five.retained_mass() == 1.0);
    CHECK(five.tail_mass() == 0.0);
    CHECK(five.probability(5) == 1.0);
    CHECK(five.probability(4) == 0.0);
    CHECK(five.kind() == FieldKind::Number);
  }

  TEST_CASE("invalid coherent parameters") {
    CHECK_THROWS_AS(make_coherent(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_coherent(-3.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_coherent(std::nan(""), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_coherent(5.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_coherent(5.0, 0.0, 1.0), std::invalid_argument);
    // The Poisson(1) tail beyond the n_max cap of 151 is ~1e-267.
    CHECK_THROWS_AS(make_coherent(1.0, 0.0, 1e-300), std::domain_error);
  }
}

TEST_SUITE("moments") {
  const auto tight = [](double mean) {
    return make_coherent(mean, kPi / 2, 1e-20);
  };

  TEST_CASE("direct moments at the named points") {
    CHECK(central_moments_direct(tight(10.0), 2)[2] ==
          doctest::Approx(0.1).epsilon(1e-12));
    // Discarded mass enters mu_1 weighted by |x| <= x_edge.
    for (double mean : {0.5, 3.0, 80.0, 5000.0}) {
      const FieldState f = make_coherent(mean, 0.0);
      const double x_edge =
          std::max(1.0, (static_cast<double>(f.last()) - mean) / mean);
      CHECK(std::abs(central_moments_direct(f, 1)[1]) <= 1e-12 * x_edge);
    }
    CHECK(central_moments_direct(tight(100.0), 3)[3] ==
          doctest::Approx(1e-4).epsilon(1e-10));
  }

  TEST_CASE("recursive moments") {
    const MomentVector m = central_moments_recursive(10.0, 3);
    CHECK(m[0] == 1.0);
    CHECK(m[1] == 0.0);
    CHECK(m[2] == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(m[3] == doctest::Approx(0.01).epsilon(1e-15));
    // Exact rationals for N = 2 (mpmath).
    const double expect[] = {1, 0, 0.5, 0.25, 0.875, 1.3125, 3.46875};
    const MomentVector two = central_moments_recursive(2.0, 6);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(two[k] == expect[k]);
  }

  TEST_CASE("direct and recursive agree") {
    for (double mean : {2.0, 10.0, 100.0}) {
      const MomentVector d = central_moments_direct(tight(mean), 6);
      const MomentVector r = central_moments_recursive(mean, 6);
      for (std::size_t k = 0; k <= 6; ++k) {
        CAPTURE(mean);
        CAPTURE(k);
        CHECK(std::abs(d[k] - r[k]) <= 1e-8);
      }
    }
    const MomentVector d2 = central_moments_direct(tight(2.0), 6);
    CHECK(std::abs(d2[6] - 3.46875) <= 1e-9);
  }

  TEST_CASE("mu_k <= 1/N once N is moderately large") {
    for (double mean : {10.0, 100.0, 1e4}) {
      const MomentVector r = central_moments_recursive(mean, 6);
      for (std::size_t k = 1; k <= 6; ++k) CHECK(r[k] <= 1.0 / mean);
    }
  }

  TEST_CASE("mu_k <= 1/N does not hold at N = 1") {
    // mu_4 = 3/N^2 + 1/N^3 exceeds 1/N for N below ~3.3.
    const MomentVector r = central_moments_recursive(1.0, 6);
    CHECK(r[4] == doctest::Approx(4.0));
    CHECK(r[4] > 1.0);
  }

  TEST_CASE("moment errors") {
    CHECK_THROWS_AS(central_moments_direct(make_coherent(3.0, 0.0), -1),
                    std::invalid_argument);
    CHECK_THROWS_AS(central_moments_recursive(3.0, -2), std::invalid_argument);
    CHECK_THROWS_AS(central_moments_direct(make_number_state(3), 2),
                    std::invalid_argument);
  }
}
