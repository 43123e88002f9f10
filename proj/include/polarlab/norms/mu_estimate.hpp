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

#include "polarlab/core/estimate.hpp"
#include "polarlab/norms/sup_estimate.hpp"
#include "polarlab/shuffle/mask.hpp"

namespace polarlab::norms {

struct MuOptions {
  int trials = 8;         ///< random Gaussian candidate forms
  int refine_steps = 80;  ///< supergradient steps on the best candidate
  int restarts = 16;      ///< restarts for every inner sup estimate
  int iters = 200;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
};

/// Search statistic for mu(A): the largest observed
///   sup|A * L| / sup|L|
/// over candidate forms L (random Gaussian tensors, and Hilbert-type
/// triangular profiles 1/(i_s - i_{s+1}) and 1/(i_s - i_{s+1} + 1/2) on each
/// adjacent slot pair), followed by ascent on the ratio from the best
/// candidate. Both sups are alternating-ascent lower bounds with identical
/// settings and shared warm starts, so the ratio is a statistic, not a
/// certificate. Requires n^m <= 65536 (candidates are dense).
[[nodiscard]] core::EstimateReport mu_lower_bound(const shuffle::Mask& a, BallSpec ball, const MuOptions& opts = {});

/// log2(2n): the closed-form bound on mu(T^{u,v}) for every 1-unconditional norm.
[[nodiscard]] double mu_upper_bound_T(int n);

}  // namespace polarlab::norms
