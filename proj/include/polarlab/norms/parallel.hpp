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

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <initializer_list>
#include <random>

namespace polarlab::norms {

/// Fixed published default seed; every estimator uses it unless told otherwise.
inline constexpr std::uint64_t kDefaultSeed = 20190117;

/// `requested` if positive, else POLARLAB_THREADS from the environment, else 1.
[[nodiscard]] int resolve_threads(int requested);

/// Generator for one parallel unit. The stream depends only on the seed and
/// the unit path, never on thread scheduling.
[[nodiscard]] std::mt19937_64 unit_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

/// Runs body(u) for u in [0, count) on up to `threads` workers. If any unit
/// throws, the exception from the lowest failing unit is rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace polarlab::norms
