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

#include "serialize.hpp"

namespace jcq::cli {

Json field_to_json(const FieldState& field) {
  Json logs = Json::array();
  for (double v : field.log_magnitudes()) logs.push_back(v);
  return {
      {"kind", field.kind() == FieldKind::Coherent ? "coherent" : "number"},
      {"n_offset", field.first()},
      {"log_magnitudes", logs},
      {"phase", field.coherent_phase()},
      {"N", field.mean_photon_number()},
      {"tail_mass", field.tail_mass()},
  };
}

Json kraus_to_json(const KrausSet& kraus) {
  Json ops = Json::array();
  for (std::size_t n = kraus.first_index(); n <= kraus.last_index(); ++n) {
    const Matrix2c& m = kraus.op(n);
    Json entries = Json::array();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        entries.push_back({m(i, j).real(), m(i, j).imag()});
      }
    }
    ops.push_back({{"n", n}, {"M", entries}});
  }
  return ops;
}

FieldRecord field_from_json(const Json& j) {
  FieldRecord r;
  r.n_offset = j.at("n_offset").get<std::size_t>();
  r.log_magnitudes = j.at("log_magnitudes").get<std::vector<double>>();
  r.phase = j.at("phase").get<double>();
  r.mean_photon_number = j.at("N").get<double>();
  r.tail_mass = j.at("tail_mass").get<double>();
  return r;
}

}  // namespace jcq::cli
