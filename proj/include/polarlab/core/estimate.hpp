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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polarlab/core/polynomial.hpp"

namespace polarlab::core {

enum class Direction {
  certified_lower_bound,  ///< value is attained at `witness`
  statistical,            ///< sample mean or search statistic with a CI
  exact,                  ///< closed form
};

[[nodiscard]] std::string_view to_string(Direction d);

/// Carrier for every norm, ratio and integral estimate in the library.
struct EstimateReport {
  double value = 0.0;
  Direction direction = Direction::exact;
  /// One vector for polynomial sups, m vectors for m-linear forms.
  std::vector<ComplexVector> witness;
  std::int64_t samples = 0;
  double ci_halfwidth = 0.0;
  std::uint64_t seed = 0;
  std::string method;
};

}  // namespace polarlab::core
