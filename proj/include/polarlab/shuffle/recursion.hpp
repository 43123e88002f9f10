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

#include <functional>
#include <optional>
#include <string>

#include "polarlab/core/polynomial.hpp"
#include "polarlab/shuffle/mask.hpp"

namespace polarlab::shuffle {

/// Exhaustive recursion checks stay within m <= 6, n <= 5.
inline constexpr int kRecursionMaxArity = 6;
inline constexpr int kRecursionMaxDim = 5;

/// Produces the weight mask for step k; mask_R in normal use, swappable so
/// tests can check that a corrupted weight is caught.
using WeightFactory = std::function<Mask(int m, int n, int k)>;

struct RecursionCounterexample {
  enum class Kind { recursion, support };
  Kind kind = Kind::recursion;
  int k = 0;
  MultiIndex index;
  Complex expected{};  ///< c_i(S_{k-1} L_P) for recursion; 0 for support
  Complex actual{};    ///< weight * c_i(S_k L_P) for recursion; offending coefficient for support
};

struct RecursionReport {
  bool passed = true;
  std::size_t checks = 0;
  std::optional<RecursionCounterexample> counterexample;
};

/// For every k in 1..m-1 and every i in I(m,n), checks
///   c_i(S_{k-1} L_P) = R_k(i) c_i(S_k L_P)
/// with S_k computed as an exact expectation over fy_distribution, and that
/// c_i(S_k L_P) != 0 only when i_{k+1} <= ... <= i_m (k = 0..m-1). The first
/// failure in (k, canonical index) order is reported.
[[nodiscard]] RecursionReport recursion_check(const core::HomPolynomial& p, const WeightFactory& weight = mask_R);

[[nodiscard]] std::string to_string(RecursionCounterexample::Kind kind);

}  // namespace polarlab::shuffle
