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
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "polarlab/core/estimate.hpp"
#include "polarlab/norms/parallel.hpp"

namespace polarlab::norms {

using core::Complex;

/// Steinhaus sampler on T^n: each coordinate is exp(i theta) with theta
/// uniform on [0, 2 pi). The stream is a pure function of (seed, path).
class TorusSampler {
 public:
  TorusSampler(int n, std::uint64_t seed, std::vector<std::uint64_t> path = {});

  [[nodiscard]] int dim() const { return n_; }
  void next(std::span<Complex> out);
  [[nodiscard]] core::ComplexVector next();

 private:
  int n_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> angle_;
};

using TorusIntegrand = std::function<double(std::span<const Complex>)>;

struct TorusOptions {
  std::int64_t samples = 20000;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  /// Extra stream coordinates; callers use this to give independent
  /// integrals (blocks, factors) disjoint streams under one seed.
  std::vector<std::uint64_t> stream;
  /// Samples per RNG stream. The partition, not the thread count, fixes the
  /// result, so any thread count reproduces the single-threaded bits.
  std::int64_t chunk = 512;
};

/// 99% two-sided normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

/// Monte Carlo mean of `integrand` over T^dim with a 99% CI half-width.
/// Throws std::runtime_error if the integrand returns a non-finite value.
[[nodiscard]] core::EstimateReport torus_expectation(const TorusIntegrand& integrand, int dim,
                                                     const TorusOptions& opts = {});

}  // namespace polarlab::norms
