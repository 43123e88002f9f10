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

#include "polarlab/core/coeff_tensor.hpp"
#include "polarlab/core/polynomial.hpp"
#include "polarlab/shuffle/permutation.hpp"

namespace polarlab::shuffle {

using core::CoeffTensor;
using core::HomPolynomial;

/// The form sum_i c_i x^(1)_{i_sigma(1)} ... x^(m)_{i_sigma(m)}: a monomial
/// with index i lands on the key j with j_t = i_sigma(t).
[[nodiscard]] CoeffTensor permute_indices(const CoeffTensor& l, const Permutation& sigma);

/// The unique symmetric m-linear form B with B(x,...,x) = P(x), from the
/// signed polarization formula evaluated on canonical basis tuples.
[[nodiscard]] CoeffTensor polarization_form(const HomPolynomial& p);

/// (1/m!) sum over sigma of L(x^sigma(1), ..., x^sigma(m)). Refuses m > 8.
[[nodiscard]] CoeffTensor symmetrize_average(const CoeffTensor& l);

/// The k-th shuffling step T_k, applied coefficientwise:
///   c_i(T_k L) = 1/(m-k+1) sum_{l=k}^m c_{(i_1..i_{k-1}, i_{k+1}..i_l, i_k, i_{l+1}..i_m)}(L).
[[nodiscard]] CoeffTensor shuffle_step(const CoeffTensor& l, int k);

/// The k-th shuffle S_k as an exact expectation over fy_distribution(m, k).
/// k = 0 returns L.
[[nodiscard]] CoeffTensor shuffle(const CoeffTensor& l, int k);

/// T_k ... T_1 L, composed step by step.
[[nodiscard]] CoeffTensor shuffle_by_steps(const CoeffTensor& l, int k);

}  // namespace polarlab::shuffle
