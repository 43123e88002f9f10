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
#include <map>
#include <random>
#include <string>
#include <vector>

namespace polarlab::shuffle {

/// Permutations are enumerated exhaustively only up to this size (8! = 40320).
inline constexpr int kMaxEnumeratedArity = 8;

/// A bijection of {1..m}. Stored 0-based; `image(t)` takes and returns
/// 1-based values so code reads like cycle notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_based_images);

  [[nodiscard]] static Permutation identity(int m);
  /// The cycle (l l-1 ... k): l -> l-1 -> ... -> k -> l, so sigma(k) = l.
  /// Identity when l == k. Requires 1 <= k <= l <= m.
  [[nodiscard]] static Permutation cycle_down(int m, int k, int l);

  [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int image(int t) const { return images_[static_cast<std::size_t>(t - 1)] + 1; }
  [[nodiscard]] std::vector<int> one_based() const;
  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;
  std::vector<int> images_;
};

/// (a ∘ b)(t) = a(b(t)).
[[nodiscard]] Permutation compose(const Permutation& a, const Permutation& b);

/// Every permutation of {1..m} in lexicographic order of one-line notation.
[[nodiscard]] std::vector<Permutation> all_permutations(int m);

/// Explicit probability law on the symmetric group.
struct PermDistribution {
  int m = 0;
  std::map<Permutation, double> probs;

  [[nodiscard]] double total() const;
  [[nodiscard]] double prob(const Permutation& s) const;
};

/// Law of the permutation after the first k steps of the Fisher-Yates
/// shuffle. Step j picks l uniformly in j..m and moves the card at position l
/// to position j, shifting j..l-1 down one place; sigma(t) is the card in
/// position t. Equivalently sigma_k = sigma_{k-1} ∘ (l l-1 ... j).
///
/// Requires 1 <= k <= m-1 and m <= kMaxEnumeratedArity.
[[nodiscard]] PermDistribution fy_distribution(int m, int k);

/// One draw from fy_distribution(m, k) by simulating the deck.
[[nodiscard]] Permutation sample_fy(int m, int k, std::mt19937_64& rng);

}  // namespace polarlab::shuffle
