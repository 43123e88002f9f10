/*
   Copyright 2026 The polarlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "polarlab/core/coeff_tensor.hpp"
#include "polarlab/core/polynomial.hpp"

namespace polarlab::cli {

// Polynomial file format: a JSON list of records
//   {"index": [j1, ..., jm], "re": <float>, "im": <float>}
// with nondecreasing 1-based indices. Doubles round-trip bit-exactly.

[[nodiscard]] nlohmann::ordered_json polynomial_to_json(const core::HomPolynomial& p);
[[nodiscard]] nlohmann::ordered_json tensor_to_json(const core::CoeffTensor& t);

/// Parses the record list. n defaults to the largest entry seen; an explicit
/// n must cover every entry. Repeated indices are summed. Throws
/// std::invalid_argument naming the offending record.
[[nodiscard]] core::HomPolynomial polynomial_from_json(const nlohmann::json& doc, std::optional<int> n = {});

[[nodiscard]] core::HomPolynomial read_polynomial(const std::string& path, std::optional<int> n = {});
void write_polynomial(const std::string& path, const core::HomPolynomial& p);

[[nodiscard]] nlohmann::ordered_json complex_to_json(core::Complex z);

}  // namespace polarlab::cli
