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

#include "polarlab/shuffle/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polarlab/core/errors.hpp"

namespace polarlab::shuffle {

Permutation::Permutation(std::vector<int> one_based_images) {
  const int m = static_cast<int>(one_based_images.size());
  if (m < 1) throw std::invalid_argument("Permutation: empty");
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  images_.reserve(static_cast<std::size_t>(m));
  for (int v : one_based_images) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("Permutation: images are not a bijection of 1..m");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    images_.push_back(v - 1);
  }
}

Permutation Permutation::identity(int m) {
  if (m < 1) throw std::invalid_argument("Permutation::identity: m must be >= 1");
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(m));
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

Permutation Permutation::cycle_down(int m, int k, int l) {
  if (!(1 <= k && k <= l && l <= m)) throw std::out_of_range("Permutation::cycle_down: need 1 <= k <= l <= m");
  Permutation p = identity(m);
  if (l == k) return p;
  p.images_[static_cast<std::size_t>(k - 1)] = l - 1;
  for (int t = k + 1; t <= l; ++t) p.images_[static_cast<std::size_t>(t - 1)] = t - 2;
  return p;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t t = 0; t < images_.size(); ++t) p.images_[static_cast<std::size_t>(images_[t])] = static_cast<int>(t);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t t = 0; t < images_.size(); ++t) {
    if (images_[t] != static_cast<int>(t)) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t t = 0; t < images_.size(); ++t) {
    if (t) s += " ";
    s += std::to_string(images_[t] + 1);
  }
  return s + "]";
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int t = 1; t <= a.size(); ++t) out[static_cast<std::size_t>(t - 1)] = a.image(b.image(t));
  return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int m) {
  if (m < 1) throw std::invalid_argument("all_permutations: m must be >= 1");
  if (m > kMaxEnumeratedArity) {
    throw core::BudgetError("all_permutations: m = " + std::to_string(m) + " exceeds the m <= " +
                            std::to_string(kMaxEnumeratedArity) + " factorial enumeration guard");
  }
  std::vector<int> cur(static_cast<std::size_t>(m));
  std::iota(cur.begin(), cur.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  return out;
}

double PermDistribution::total() const {
  double s = 0.0;
  for (const auto& [perm, p] : probs) s += p;
  return s;
}

double PermDistribution::prob(const Permutation& s) const {
  auto it = probs.find(s);
  return it == probs.end() ? 0.0 : it->second;
}

PermDistribution fy_distribution(int m, int k) {
  if (m > kMaxEnumeratedArity) {
    throw core::BudgetError("fy_distribution: m = " + std::to_string(m) + " exceeds the m <= " +
                            std::to_string(kMaxEnumeratedArity) + " factorial enumeration guard");
  }
  if (m < 2 || k < 1 || k > m - 1) {
    throw std::out_of_range("fy_distribution: need 1 <= k <= m-1 (m = " + std::to_string(m) +
                            ", k = " + std::to_string(k) + ")");
  }
  PermDistribution dist{m, {{Permutation::identity(m), 1.0}}};
  for (int j = 1; j <= k; ++j) {
    const double w = 1.0 / static_cast<double>(m - j + 1);
    std::map<Permutation, double> next;
    for (const auto& [sigma, p] : dist.probs) {
      for (int l = j; l <= m; ++l) next[compose(sigma, Permutation::cycle_down(m, j, l))] += p * w;
    }
    dist.probs = std::move(next);
  }
  return dist;
}

Permutation sample_fy(int m, int k, std::mt19937_64& rng) {
  if (m < 2 || k < 1 || k > m - 1) throw std::out_of_range("sample_fy: need 1 <= k <= m-1");
  std::vector<int> deck(static_cast<std::size_t>(m));
  std::iota(deck.begin(), deck.end(), 1);
  for (int j = 1; j <= k; ++j) {
    std::uniform_int_distribution<int> pick(j, m);
    const int l = pick(rng);
    std::rotate(deck.begin() + (j - 1), deck.begin() + (l - 1), deck.begin() + l);
  }
  return Permutation(std::move(deck));
}

}  // namespace polarlab::shuffle
