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

#include <cstdint>

namespace jcq::poisson {

// log(n!) - log(sqrt(2 pi n) (n/e)^n), the Stirling remainder.
double stirling_error(double n);

// Deviance term n log(n/lambda) + lambda - n, evaluated without cancellation
// when n is close to lambda.
double deviance(double n, double lambda);

/// Natural log of the Poisson pmf e^{-lambda} lambda^n / n!.
///
/// Uses Loader's saddle-point decomposition so the result keeps full relative
/// precision for lambda up to ~1e15; a naive `n log(lambda) - lgamma(n+1)`
/// loses about log10(lambda) digits to cancellation near the mode.
double log_pmf(std::uint64_t n, double lambda);

}  // namespace jcq::poisson
