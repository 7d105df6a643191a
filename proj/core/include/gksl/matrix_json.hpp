// Copyright 2026 The gksl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encoding of square complex matrices: {"dim": n, "re": [...], "im": [...]}
// with entries in row-major order. "im" may be omitted for real matrices.

#pragma once

#include <nlohmann/json.hpp>

#include "gksl/opcore.hpp"

namespace gksl {

nlohmann::json matrix_to_json(const CMatrix& m);
// Throws DimensionError on malformed input (dim < 1, wrong entry counts).
CMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace gksl
