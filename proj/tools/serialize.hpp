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

#include "jcq/fock_field.hpp"
#include "jcq/jc_channel.hpp"
#include "table.hpp"

namespace jcq::cli {

/// {n_offset, log_magnitudes, phase, N, tail_mass, kind}.
Json field_to_json(const FieldState& field);

/// Array of {n, M: [[re, im] x 4]} in row-major order M00, M01, M10, M11.
Json kraus_to_json(const KrausSet& kraus);

/// Inverse of field_to_json; used to check dumps reload to the same state.
struct FieldRecord {
  std::size_t n_offset = 0;
  std::vector<double> log_magnitudes;
  double phase = 0.0;
  double mean_photon_number = 0.0;
  double tail_mass = 0.0;
};
FieldRecord field_from_json(const Json& j);

}  // namespace jcq::cli
