// Copyright 2026 The hygent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYGENT_JSON_IO_HPP
#define HYGENT_JSON_IO_HPP

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>

#include "hygent/blowup.hpp"
#include "hygent/hypergraphon.hpp"
#include "hygent/rado.hpp"
#include "hygent/structure.hpp"

namespace hygent {

using Json = nlohmann::json;

Json signature_to_json(const Signature& sig);
Signature signature_from_json(const Json& j);

Json structure_to_json(const FiniteStructure& m);
FiniteStructure structure_from_json(const Json& j);
Json structure_to_json(const RedundantStructure& m);
RedundantStructure redundant_structure_from_json(const Json& j);

Json hypergraphon_to_json(const StepHypergraphon& w);
StepHypergraphon hypergraphon_from_json(const Json& j);

Json schedule_to_json(const BlowupSchedule& sched);
BlowupSchedule schedule_from_json(const Json& j);

/// Explicit generations with their subset encodings.
Json rado_to_json(const RadoHypergraph& rado);

/// gamma.csv: header optional, rows "n,gamma" with exact rational gamma.
GammaTable gamma_table_from_csv(std::istream& in);

/// Serialized with sorted keys and no trailing whitespace; byte-stable.
std::string to_json_text(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

/// Shortest round-trip decimal for doubles (CSV output).
std::string format_double(double x);

}  // namespace hygent

#endif  // HYGENT_JSON_IO_HPP
