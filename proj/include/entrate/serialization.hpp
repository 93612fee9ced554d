// Copyright 2026 The entrate Authors.
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

// JSON forms of operators, pairs, states and audit reports.
//
//   operator: { "dim": n, "re": [[...]], "im": [[...]] }   (row-major)
//   pair:     { "p": p, "X": operator, "Y": operator }
//   state:    { "dims": [d_a, d_A, d_B, d_b], "re": [...], "im": [...] }

#ifndef ENTRATE_SERIALIZATION_HPP
#define ENTRATE_SERIALIZATION_HPP

#include <string>

#include "json.hpp"

#include "entrate/operator_core.hpp"
#include "entrate/rate_engine.hpp"

namespace entrate {

using Json = nlohmann::json;

Json to_json(const HermitianOperator& op);
HermitianOperator operator_from_json(const Json& j);

Json to_json(const AdmissiblePair& pair);
AdmissiblePair pair_from_json(const Json& j);

Json to_json(const BipartiteState& state);
BipartiteState state_from_json(const Json& j);

Json to_json(const DecompositionReport& report);

// Parses text, mapping syntax errors to ErrorCode::invalid_argument with the
// line/column of the failure.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

// Field access with "<origin>: missing field 'name'" diagnostics.
const Json& require_field(const Json& j, const char* name, const std::string& origin);

}  // namespace entrate

#endif  // ENTRATE_SERIALIZATION_HPP
