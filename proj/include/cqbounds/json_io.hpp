// Copyright 2026 The cqbounds Authors
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

#ifndef CQBOUNDS_JSON_IO_HPP_
#define CQBOUNDS_JSON_IO_HPP_

#include <string>

#include "json.hpp"

#include "cqbounds/channel.hpp"

namespace cqbounds {

using Json = nlohmann::json;

// Hermitian and normalization tolerance for ingested states.
inline constexpr double kIngestTolerance = 1e-8;

// {"re": [[...]], "im": [[...]]}; "im" may be omitted for real matrices.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& context);

// Rejects (DomainError naming `label`) states that are not Hermitian or not
// of unit trace within kIngestTolerance, then hermitizes and renormalizes.
DensityOperator state_from_json(const Json& j, const std::string& label);
Json state_to_json(const DensityOperator& rho);

// {"dim": d, "inputs": [{"label": ..., "state": {...}}, ...]} or
// {"builtin": {"kind": "depolarizing"|"noiseless", "d": ..., "alpha": ...}}.
Channel channel_from_json(const Json& j);
Json channel_to_json(const Channel& ch);

// Parses a file; ParseError carries the line and column of malformed JSON.
Json parse_json_text(const std::string& text, const std::string& source);
Json load_json_file(const std::string& path);

}  // namespace cqbounds

#endif  // CQBOUNDS_JSON_IO_HPP_
