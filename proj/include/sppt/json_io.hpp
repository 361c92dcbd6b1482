// Copyright 2026 The sppt developers
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

#include <json.hpp>

#include "sppt/basis_tools.hpp"
#include "sppt/decomposition.hpp"

// JSON interchange schema. A matrix is
//   {"rows": R, "cols": C, "data": [[re, im], ...]}        (row-major)
// and a state adds {"dim_a": M, "dim_b": N, "normalized": bool}. Numbers
// round-trip exactly (shortest representation that parses back to the same
// double). Parsers validate dimensions and value invariants and throw
// sppt::Error (ParseError for malformed documents).

namespace sppt {

nlohmann::json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BipartiteState& s);
BipartiteState state_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BlockFactor& f);
BlockFactor factor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Classification& c);

nlohmann::json to_json(const SeparableDecomposition& d);
SeparableDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);

/// Parse text into JSON, converting library exceptions into ParseError.
nlohmann::json parse_json(const std::string& text);

}  // namespace sppt
