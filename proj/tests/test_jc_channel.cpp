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
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "jcq/jc_channel.hpp"
#include "oracles.hpp"

using namespace jcq;
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace {

Matrix2c phase_gate(double phi) {
  Matrix2c p = Matrix2c::Zero();
  p(0, 0) = std::polar(1.0, phi / 2);
  p(1, 1) = std::polar(1.0, -phi / 2);
  return p;
}

Matrix2c rotate_classically(const Matrix2c& rho, double vartheta) {
  const Matrix2c r = bloch_rotation(vartheta).cast<cplx>();
  return r * rho * r.adjoint();
}

std::vector<cplx> padded_amplitudes(const FieldState& f, std::size_t pad) {
  std::vector<cplx> c(f.last() + 1 + pad, cplx(0.0, 0.0));
  for (std::size_t n = f.first(); n <= f.last(); ++n) {
    c[n] = f.amplitude(static_cast<std::int64_t>(n));
  }
  return c;
}

}  // namespace

TEST_SUITE("bloch_rotation") {
  TEST_CASE("identity at zero") {
    CHECK(bloch_rotation(0.0).isApprox(Matrix2r::Identity()));
  }

  TEST_CASE("pi/4 takes |0> to the evenly occupied state") {
    const Eigen::Vector2d ground(0.0, 1.0);
    const Eigen::Vector2d out = bloch_rotation(kPi / 4) * ground;
    CHECK(out(kExcited) == doctest::Approx(std::sin(kPi / 4)));
    CHECK(out(kGround) == doctest::Approx(std::cos(kPi / 4)));
  }

  TEST_CASE("composition R(a) R(b) = R(a + b)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    for (int i = 0; i < 50; ++i) {
      const double a = angle(rng), b = angle(rng);
      const Matrix2r diff =
          bloch_rotation(a) * bloch_rotation(b) - bloch_rotation(a + b);
      CHECK(diff.cwiseAbs().maxCoeff() <= 1e-14);
    }
  }
}

TEST_SUITE("qubit_state") {
  TEST_CASE("validation rejects non-physical matrices") {
    Matrix2c bad = Matrix2c::Identity();
    CHECK_THROWS_AS(QubitState::from_matrix(bad), std::invalid_argument);
    bad = Matrix2c::Zero();
    bad(0, 0) = 1.5;
    bad(1, 1) = -0.5;
    CHECK_THROWS_AS(QubitState::from_matrix(bad), std::invalid_argument);
    bad = 0.5 * Matrix2c::Identity();
    bad(0, 1) = cplx(0.1, 0.2);
    CHECK_THROWS_AS(QubitState::from_matrix(bad), std::invalid_argument);
    CHECK_NOTHROW(QubitState::from_matrix(QubitState::pure(0.3).rho()));
  }

  TEST_CASE("pure(theta0) puts sin^2 theta0 in the excited level") {
    const QubitState s = QubitState::pure(0.4);
    CHECK(s(kExcited, kExcited).real() ==
          doctest::Approx(std::sin(0.4) * std::sin(0.4)));
    CHECK(QubitState::ground()(kGround, kGround).real() == 1.0);
    CHECK(QubitState::excited()(kExcited, kExcited).real() == 1.0);
  }
}

TEST_SUITE("build_kraus") {
  TEST_CASE("vacuum field") {
    const double kappa = 0.83;
    const KrausSet k = build_kraus(make_number_state(0),
                                   PulseSpec::from_kappa(kappa, 0.0));
    REQUIRE(k.first_index() == 0);
    REQUIRE(k.last_index() == 1);
    const Matrix2c& m0 = k.op(0);
    CHECK(std::abs(m0(0, 0) - std::cos(kappa)) < 1e-15);
    CHECK(std::abs(m0(1, 1) - 1.0) < 1e-15);
    CHECK(std::abs(m0(0, 1)) == 0.0);
    CHECK(std::abs(m0(1, 0)) == 0.0);
    const Matrix2c& m1 = k.op(1);
    CHECK(std::abs(m1(1, 0) - cplx(0.0, -std::sin(kappa))) < 1e-15);
    CHECK(std::abs(m1(0, 0)) == 0.0);
    CHECK(std::abs(m1(0, 1)) == 0.0);
    CHECK(std::abs(m1(1, 1)) == 0.0);
  }

  TEST_CASE("entry pattern follows the field amplitudes") {
    const FieldState f = make_coherent(30.0, 0.9);
    const PulseSpec p = PulseSpec::from_vartheta(0.6, 30.0);
    const KrausSet k = build_kraus(f, p);
    CHECK(k.first_index() == (f.first() == 0 ? 0 : f.first() - 1));
    CHECK(k.last_index() == f.last() + 1);
    for (std::size_t n = k.first_index(); n <= k.last_index(); ++n) {
      const auto i = static_cast<std::int64_t>(n);
      const double a = p.kappa * std::sqrt(n + 1.0);
      const double b = p.kappa * std::sqrt(static_cast<double>(n));
      const Matrix2c& m = k.op(n);
      CHECK(std::abs(m(0, 0) - f.amplitude(i) * std::cos(a)) < 1e-15);
      CHECK(std::abs(m(0, 1) - cplx(0, -1) * f.amplitude(i + 1) * std::sin(a)) <
            1e-15);
      CHECK(std::abs(m(1, 0) - cplx(0, -1) * f.amplitude(i - 1) * std::sin(b)) <
            1e-15);
      CHECK(std::abs(m(1, 1) - f.amplitude(i) * std::cos(b)) < 1e-15);
    }
  }

  TEST_CASE("zero coupling is the identity channel") {
    std::mt19937_64 rng(11);
    const FieldState f = make_coherent(50.0, kRotationPhase);
    const KrausSet k = build_kraus(f, PulseSpec::from_vartheta(0.0, 50.0));
    for (int i = 0; i < 10; ++i) {
      const QubitState rho =
          QubitState::from_matrix(oracle::random_density(rng), 1e-12);
      CHECK(max_abs_entry(apply_channel(rho, k).rho() - rho.rho()) <= 1e-12);
    }
  }

  TEST_CASE("completeness at N = 1e4") {
    const FieldState f = make_coherent(1e4, kRotationPhase);
    const KrausSet k = build_kraus(f, PulseSpec::from_vartheta(kPi / 4, 1e4));
    CHECK(k.completeness_residual() <= 1e-11);
  }

  TEST_CASE("number states are trace preserving") {
    for (std::size_t m : {0u, 1u, 4u, 16u}) {
      const KrausSet k =
          build_kraus(make_number_state(m), PulseSpec::from_kappa(0.37, m));
      CHECK(k.completeness_residual() <= 1e-15);
    }
  }
}

TEST_SUITE("apply_channel") {
  TEST_CASE("matches dense propagation of the field-qubit system") {
    std::mt19937_64 rng(3);
    for (double phi : {kPi / 2, 0.3}) {
      const FieldState f = make_coherent(6.0, phi, 1e-15);
      const KrausSet k = build_kraus(f, PulseSpec::from_vartheta(1.1, 6.0));
      const auto amps = padded_amplitudes(f, 3);
      for (int i = 0; i < 5; ++i) {
        const Matrix2c rho = oracle::random_density(rng);
        const Matrix2c dense =
            oracle::dense_jc_evolution(amps, rho, k.pulse().kappa);
        const Matrix2c fast =
            apply_channel(QubitState::unchecked(rho), k).rho();
        CHECK(max_abs_entry(dense - fast) <= 1e-10);
      }
    }
    const FieldState fock = make_number_state(3);
    const KrausSet k = build_kraus(fock, PulseSpec::from_kappa(0.9, 3.0));
    const Matrix2c rho = oracle::random_density(rng);
    const Matrix2c dense =
        oracle::dense_jc_evolution(padded_amplitudes(fock, 3), rho, 0.9);
    CHECK(max_abs_entry(dense - apply_channel(QubitState::unchecked(rho), k)
                                    .rho()) <= 1e-12);
  }

  TEST_CASE("number-state pi/2 control leaves the qubit completely mixed") {
    const std::size_t m = 16;
    const KrausSet k = build_kraus(
        make_number_state(m), PulseSpec::from_kappa(kPi / (4.0 * 4.0), 16.0));
    const QubitState out = apply_channel(QubitState::ground(), k);
    CHECK(std::abs(out(0, 0) - 0.5) <= 1e-12);
    CHECK(std::abs(out(1, 1) - 0.5) <= 1e-12);
    CHECK(out(0, 1) == cplx(0.0, 0.0));
    CHECK(out(1, 0) == cplx(0.0, 0.0));
  }

  TEST_CASE("coherent N=1e6 pi/2 control approaches the Bloch rotation") {
    const FieldState f = make_coherent(1e6, kRotationPhase);
    const KrausSet k = build_kraus(f, PulseSpec::from_vartheta(kPi / 4, 1e6));
    const QubitState in = QubitState::ground();
    CHECK(max_abs_entry(apply_channel(in, k).rho() -
                        rotate_classically(in.rho(), kPi / 4)) <= 1e-5);
  }

  TEST_CASE("coherent N=100 populations match the photon-number sums") {
    const double mean = 100.0;
    const FieldState f = make_coherent(mean, kRotationPhase);
    const KrausSet k = build_kraus(f, PulseSpec::from_vartheta(kPi / 4, mean));
    const QubitState out = apply_channel(QubitState::ground(), k);
    double excited = 0.0, ground = 0.0;
    for (std::size_t n = 0; n < 400; ++n) {
      const double p = oracle::naive_poisson_pmf(n, mean);
      const double s = std::sin(kPi / 4 * std::sqrt(n / mean));
      excited += p * s * s;
      ground += p * (1.0 - s * s);
    }
    CHECK(std::abs(out(0, 0).real() - excited) <= 1e-10);
    CHECK(std::abs(out(1, 1).real() - ground) <= 1e-10);
    // 30-digit reference.
    CHECK(std::abs(out(0, 0).real() - 0.49901900345339105) <= 1e-10);
  }

  TEST_CASE("other coherent phases conjugate the pi/2 map by P(phi - pi/2)") {
    std::mt19937_64 rng(5);
    const double phi = 1.3;
    const KrausSet rot = build_kraus(make_coherent(40.0, kRotationPhase),
                                     PulseSpec::from_vartheta(0.7, 40.0));
    const KrausSet gen = build_kraus(make_coherent(40.0, phi),
                                     PulseSpec::from_vartheta(0.7, 40.0));
    const Matrix2c p = phase_gate(phi - kPi / 2);
    for (int i = 0; i < 5; ++i) {
      const Matrix2c rho = oracle::random_density(rng);
      const Matrix2c inner = p.adjoint() * rho * p;
      const Matrix2c expect =
          p * apply_channel(QubitState::unchecked(inner), rot).rho() *
          p.adjoint();
      CHECK(max_abs_entry(apply_channel(QubitState::unchecked(rho), gen).rho() -
                          expect) <= 1e-12);
    }
  }

  TEST_CASE("CPTP property over random inputs") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> log_n(0.0, 4.0);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    for (int trial = 0; trial < 100; ++trial) {
      const double mean = std::pow(10.0, log_n(rng));
      const double vartheta = angle(rng);
      const QubitState rho =
          QubitState::from_matrix(oracle::random_density(rng), 1e-12);
      const KrausSet k = build_kraus(make_coherent(mean, kRotationPhase),
                                     PulseSpec::from_vartheta(vartheta, mean));
      const QubitState out = apply_channel(rho, k);
      CAPTURE(mean);
      CAPTURE(vartheta);
      CHECK(out.hermiticity_defect() <= 10 * kDefaultTailTol);
      CHECK(std::abs(out.trace() - 1.0) <= 10 * kDefaultTailTol);
      CHECK(out.eigenvalues()(0) >= -10 * kDefaultTailTol);
    }
  }

  TEST_CASE("linearity") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const KrausSet k = build_kraus(make_coherent(300.0, kRotationPhase),
                                   PulseSpec::from_vartheta(0.9, 300.0));
    for (int i = 0; i < 20; ++i) {
      const Matrix2c a = oracle::random_density(rng);
      const Matrix2c b = oracle::random_density(rng);
      const double alpha = unif(rng);
      const Matrix2c mix = alpha * a + (1 - alpha) * b;
      const Matrix2c lhs = apply_channel(QubitState::unchecked(mix), k).rho();
      const Matrix2c rhs =
          alpha * apply_channel(QubitState::unchecked(a), k).rho() +
          (1 - alpha) * apply_channel(QubitState::unchecked(b), k).rho();
      CHECK(max_abs_entry(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_SUITE("classical_limit_distance") {
  TEST_CASE("O(1/N) convergence") {
    const QubitState g = QubitState::ground();
    const double d1 = classical_limit_distance(g, 1e3, kPi / 4);
    const double d2 = classical_limit_distance(g, 1e4, kPi / 4);
    CHECK(d1 / d2 >= 7.0);
    CHECK(d1 / d2 <= 13.0);
    double prev = classical_limit_distance(g, 1e2, kPi / 4);
    for (double mean : {1e3, 1e4, 1e5}) {
      const double d = classical_limit_distance(g, mean, kPi / 4);
      CHECK(d < prev);
      prev = d;
    }
  }

  TEST_CASE("zero pulse area") {
    CHECK(classical_limit_distance(QubitState::pure(0.7), 500.0, 0.0) <= 1e-12);
  }

  TEST_CASE("maximally mixed input only sees the channel's non-unitality") {
    const double mean = 50.0, v = 0.9;
    // Rotation fixes I/2, so the distance is max|1/2 sum |C_n|^2 m m^T - I/2|.
    Matrix2r acc = Matrix2r::Zero();
    for (std::size_t n = 0; n < 300; ++n) {
      const double x = (n - mean) / mean;
      const double up = std::sqrt(1 + x + 1 / mean), dn = std::sqrt(1 + x);
      Matrix2r m;
      m << std::cos(v * up), std::sin(v * up) / up, -dn * std::sin(v * dn),
          std::cos(v * dn);
      acc += oracle::naive_poisson_pmf(n, mean) * 0.5 * m * m.transpose();
    }
    const double expect =
        (acc - 0.5 * Matrix2r::Identity()).cwiseAbs().maxCoeff();
    CHECK(classical_limit_distance(QubitState::maximally_mixed(), mean, v) ==
          doctest::Approx(expect).epsilon(1e-9));
    CHECK(expect > 1e-4);
  }

  TEST_CASE("rejects N < 1") {
    CHECK_THROWS_AS(classical_limit_distance(QubitState::ground(), 0.5, 0.3),
                    std::invalid_argument);
  }
}
