// Copyright 2026 The qcfb Authors
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

// JSON encoding of dense matrices: {"rows": r, "cols": c, "data": [[...], ...]}
// with data row-major.

#include <nlohmann/json.hpp>

#include "qcfb/qls.hpp"

namespace qcfb {

nlohmann::json matrix_to_json(const Matrix& m);
/// Throws DimensionError on ragged data or a rows/cols mismatch.
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

}  // namespace qcfb
