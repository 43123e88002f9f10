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

#include "polarlab/core/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace polarlab::core {

MultiIndex::MultiIndex(std::span<const int> entries, int n) : m_(static_cast<int>(entries.size())), n_(n) {
  if (m_ < 1 || m_ > kMaxArity) {
    throw std::invalid_argument("MultiIndex: arity " + std::to_string(m_) + " outside 1.." +
                                std::to_string(kMaxArity));
  }
  if (n < 1) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  for (std::size_t s = 0; s < entries.size(); ++s) {
    if (entries[s] < 1 || entries[s] > n) {
      throw std::out_of_range("MultiIndex: entry " + std::to_string(entries[s]) + " outside 1.." +
                              std::to_string(n));
    }
    entries_[s] = entries[s];
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries, int n)
    : MultiIndex(std::span<const int>(entries.begin(), entries.size()), n) {}

bool MultiIndex::is_nondecreasing() const {
  for (int s = 1; s < m_; ++s) {
    if (entries_[static_cast<std::size_t>(s - 1)] > entries_[static_cast<std::size_t>(s)]) return false;
  }
  return true;
}

MultiIndex MultiIndex::sorted() const {
  MultiIndex out = *this;
  std::sort(out.entries_.begin(), out.entries_.begin() + m_);
  return out;
}

MultiIndex MultiIndex::with(int slot, int value) const {
  if (slot < 0 || slot >= m_) throw std::out_of_range("MultiIndex::with: slot out of range");
  if (value < 1 || value > n_) throw std::out_of_range("MultiIndex::with: value out of range");
  MultiIndex out = *this;
  out.entries_[static_cast<std::size_t>(slot)] = value;
  return out;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (int k = 0; k < m_; ++k) {
    if (k) s += ",";
    s += std::to_string(entries_[static_cast<std::size_t>(k)]);
  }
  return s + ")";
}

bool operator==(const MultiIndex& a, const MultiIndex& b) {
  return a.m_ == b.m_ && a.n_ == b.n_ &&
         std::equal(a.entries_.begin(), a.entries_.begin() + a.m_, b.entries_.begin());
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  for (int k = 0; k < a.m_; ++k) {
    if (auto c = a.entries_[static_cast<std::size_t>(k)] <=> b.entries_[static_cast<std::size_t>(k)]; c != 0) {
      return c;
    }
  }
  return a.n_ <=> b.n_;
}

std::size_t index_set_size(int m, int n, std::size_t cap) {
  std::size_t total = 1;
  for (int k = 0; k < m; ++k) {
    if (total > cap / static_cast<std::size_t>(n)) return 0;
    total *= static_cast<std::size_t>(n);
  }
  return total;
}

}  // namespace polarlab::core
