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

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polarlab::core {

/// Largest arity a MultiIndex can hold. Keys are stored inline, so this also
/// bounds the degree of every tensor and polynomial in the library.
inline constexpr int kMaxArity = 12;

/// An m-tuple of coordinate indices, each in 1..n.
///
/// Entries are 1-based to match the usual notation for I(m,n); slots are
/// 0-based. Ordering is lexicographic over the entries, so ordered maps keyed
/// by MultiIndex enumerate in canonical order.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::span<const int> entries, int n);
  MultiIndex(std::initializer_list<int> entries, int n);

  [[nodiscard]] int arity() const { return m_; }
  [[nodiscard]] int dim() const { return n_; }

  /// Entry at 0-based slot; value in 1..n.
  [[nodiscard]] int operator[](int slot) const { return entries_[static_cast<std::size_t>(slot)]; }
  [[nodiscard]] std::span<const int> entries() const {
    return {entries_.data(), static_cast<std::size_t>(m_)};
  }

  [[nodiscard]] bool is_nondecreasing() const;
  [[nodiscard]] MultiIndex sorted() const;

  /// Returns a copy with entry at `slot` replaced. Bounds are checked.
  [[nodiscard]] MultiIndex with(int slot, int value) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b);
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::array<int, kMaxArity> entries_{};
  int m_ = 0;
  int n_ = 0;
};

/// Visits every element of I(m,n) in lexicographic order.
template <class F>
void for_each_multi_index(int m, int n, F&& visit) {
  if (m <= 0 || n <= 0) return;
  std::vector<int> cur(static_cast<std::size_t>(m), 1);
  while (true) {
    visit(MultiIndex(cur, n));
    int slot = m - 1;
    while (slot >= 0 && cur[static_cast<std::size_t>(slot)] == n) {
      cur[static_cast<std::size_t>(slot)] = 1;
      --slot;
    }
    if (slot < 0) return;
    ++cur[static_cast<std::size_t>(slot)];
  }
}

/// Visits every nondecreasing element of I(m,n) in lexicographic order.
template <class F>
void for_each_nondecreasing_index(int m, int n, F&& visit) {
  if (m <= 0 || n <= 0) return;
  std::vector<int> cur(static_cast<std::size_t>(m), 1);
  while (true) {
    visit(MultiIndex(cur, n));
    int slot = m - 1;
    while (slot >= 0 && cur[static_cast<std::size_t>(slot)] == n) --slot;
    if (slot < 0) return;
    const int next = cur[static_cast<std::size_t>(slot)] + 1;
    for (int s = slot; s < m; ++s) cur[static_cast<std::size_t>(s)] = next;
  }
}

/// |I(m,n)| = n^m, or 0 on overflow past `cap`.
[[nodiscard]] std::size_t index_set_size(int m, int n, std::size_t cap = static_cast<std::size_t>(-1));

}  // namespace polarlab::core
