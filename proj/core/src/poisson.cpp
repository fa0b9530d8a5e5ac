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

#include "jcq/poisson.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace jcq::poisson {

namespace {

// stirling_error(k/2) for k = 0..30.
constexpr std::array<double, 31> kHalfIntegerErrors = {
    0.0,  // unused
    0.1534264097200273452913848,   0.0810614667953272582196702,
    0.0548141210519176538961390,   0.0413406959554092940938221,
    0.03316287351993628748511048,  0.02767792568499833914878929,
    0.02374616365629749597132920,  0.02079067210376509311152277,
    0.01848845053267318523077934,  0.01664469118982119216319487,
    0.01513497322191737887351255,  0.01387612882307074799874573,
    0.01281046524292022692424986,  0.01189670994589177009505572,
    0.01110455975820691732662991,  0.010411265261972096497478567,
    0.009799416126158803298389475, 0.009255462182712732917728637,
    0.008768700134139385462952823, 0.008330563433362871256469318,
    0.007934114564314020547248100, 0.007573675487951840794972024,
    0.007244554301320383179543912, 0.006942840107209529865664152,
    0.006665247032707682442354394, 0.006408994188004207068439631,
    0.006171712263039457647532867, 0.005951370112758847735624416,
    0.005746216513010115682023589, 0.005554733551962801371038690,
};

constexpr double S0 = 1.0 / 12.0;
constexpr double S1 = 1.0 / 360.0;
constexpr double S2 = 1.0 / 1260.0;
constexpr double S3 = 1.0 / 1680.0;
constexpr double S4 = 1.0 / 1188.0;

}  // namespace

double stirling_error(double n) {
  if (n <= 15.0) {
    const double twice = n + n;
    if (twice == std::floor(twice)) {
      return kHalfIntegerErrors[static_cast<std::size_t>(twice)];
    }
    return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n -
           0.5 * std::log(2.0 * std::numbers::pi);
  }
  const double nn = n * n;
  if (n > 500) return (S0 - S1 / nn) / n;
  if (n > 80) return (S0 - (S1 - S2 / nn) / nn) / n;
  if (n > 35) return (S0 - (S1 - (S2 - S3 / nn) / nn) / nn) / n;
  return (S0 - (S1 - (S2 - (S3 - S4 / nn) / nn) / nn) / nn) / n;
}

double deviance(double n, double lambda) {
  if (std::abs(n - lambda) < 0.1 * (n + lambda)) {
    double v = (n - lambda) / (n + lambda);
    double s = (n - lambda) * v;
    if (std::abs(s) < std::numeric_limits<double>::min()) return s;
    double ej = 2.0 * n * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double next = s + ej / (2 * j + 1);
      if (next == s) return next;
      s = next;
    }
    return s;
  }
  return n * std::log(n / lambda) + lambda - n;
}

double log_pmf(std::uint64_t n, double lambda) {
  if (!(lambda > 0.0)) {
    return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  if (n == 0) return -lambda;
  const double x = static_cast<double>(n);
  return -stirling_error(x) - deviance(x, lambda) -
         0.5 * std::log(2.0 * std::numbers::pi * x);
}

}  // namespace jcq::poisson
