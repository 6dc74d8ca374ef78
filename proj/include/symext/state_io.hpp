// Copyright 2026 The symext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// State file format:
//   {"dims": [d1, ...], "party": ["A" | "B", ...], "re": [[...], ...], "im": [[...], ...]}
// with row-major matrices. Doubles are written with round-trip precision,
// so write followed by read reproduces the matrix bit for bit.

#ifndef SYMEXT_STATE_IO_HPP
#define SYMEXT_STATE_IO_HPP

#include <string>

#include <json.hpp>

#include "symext/linalg.hpp"

namespace symext::io {

nlohmann::json matrix_to_json(const CMatrix& m);  // {"re": ..., "im": ...}
CMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);

void write_state(const std::string& path, const DensityMatrix& rho);
DensityMatrix read_state(const std::string& path);

}  // namespace symext::io

#endif  // SYMEXT_STATE_IO_HPP
