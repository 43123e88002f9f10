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

#include "polarlab/shuffle/mask.hpp"

#include <stdexcept>

#include "polarlab/core/errors.hpp"

namespace polarlab::shuffle {

namespace {

constexpr std::size_t kMaterializeBudget = std::size_t{1} << 22;

void check_slot(int m, int s, const char* who) {
  if (s < 1 || s > m) throw std::out_of_range(std::string(who) + ": slot " + std::to_string(s) + " outside 1..m");
}

void check_shape(const Mask& a, const Mask& b) {
  if (a.arity() != b.arity() || a.dim() != b.dim()) throw std::invalid_argument("Mask: shape mismatch");
}

}  // namespace

Mask::Mask(int m, int n, Entry entry, std::string label)
    : m_(m), n_(n), entry_(std::move(entry)), label_(std::move(label)) {
  if (m < 1 || m > core::kMaxArity || n < 1) throw std::invalid_argument("Mask: bad shape");
  if (!entry_) throw std::invalid_argument("Mask: empty entry function");
}

Complex Mask::entry(const MultiIndex& i) const {
  if (i.arity() != m_ || i.dim() != n_) throw std::invalid_argument("Mask: index shape mismatch");
  return entry_(i);
}

Mask Mask::constant(int m, int n, Complex value) {
  return Mask(m, n, [value](const MultiIndex&) { return value; }, "const");
}

Mask operator*(const Mask& a, const Mask& b) {
  check_shape(a, b);
  return Mask(a.arity(), a.dim(), [a, b](const MultiIndex& i) { return a.entry(i) * b.entry(i); },
              "(" + a.label() + "*" + b.label() + ")");
}

Mask operator+(const Mask& a, const Mask& b) {
  check_shape(a, b);
  return Mask(a.arity(), a.dim(), [a, b](const MultiIndex& i) { return a.entry(i) + b.entry(i); },
              "(" + a.label() + "+" + b.label() + ")");
}

Mask operator*(Complex s, const Mask& a) {
  return Mask(a.arity(), a.dim(), [s, a](const MultiIndex& i) { return s * a.entry(i); }, "s" + a.label());
}

Mask mask_D(int m, int n, int u, int v) {
  check_slot(m, u, "mask_D");
  check_slot(m, v, "mask_D");
  return Mask(m, n, [u, v](const MultiIndex& i) { return Complex(i[u - 1] == i[v - 1] ? 1.0 : 0.0); },
              "D" + std::to_string(u) + "," + std::to_string(v));
}

Mask mask_T(int m, int n, int u, int v) {
  check_slot(m, u, "mask_T");
  check_slot(m, v, "mask_T");
  return Mask(m, n, [u, v](const MultiIndex& i) { return Complex(i[u - 1] <= i[v - 1] ? 1.0 : 0.0); },
              "T" + std::to_string(u) + "," + std::to_string(v));
}

Mask mask_R(int m, int n, int k) {
  if (k < 1 || k > m - 1) throw std::out_of_range("mask_R: k = " + std::to_string(k) + " outside 1..m-1");
  return Mask(
      m, n,
      [m, k](const MultiIndex& i) {
        if (i[k - 1] > i[k]) return Complex{};
        double s = 1.0;
        for (int u = 1; u <= m - k; ++u) {
          if (i[k - 1] == i[k + u - 1]) s += 1.0 / (u + 1) - 1.0 / u;
        }
        return Complex(static_cast<double>(m - k + 1) * s);
      },
      "R" + std::to_string(k));
}

Mask mask_R_factored(int m, int n, int k) {
  if (k < 1 || k > m - 1) throw std::out_of_range("mask_R_factored: k outside 1..m-1");
  Mask inner = Mask::ones(m, n);
  for (int u = 1; u <= m - k; ++u) {
    inner = inner + Complex(1.0 / (u + 1) - 1.0 / u) * mask_D(m, n, k, k + u);
  }
  return Complex(static_cast<double>(m - k + 1)) * (mask_T(m, n, k, k + 1) * inner);
}

CoeffTensor schur(const Mask& a, const CoeffTensor& l) {
  if (a.arity() != l.arity() || a.dim() != l.dim()) throw std::invalid_argument("schur: shape mismatch");
  CoeffTensor out(l.arity(), l.dim());
  for (const auto& [i, c] : l.coeffs()) {
    const Complex w = a.entry(i);
    if (w != Complex{}) out.set(i, w * c);
  }
  return out;
}

CoeffTensor schur(const CoeffTensor& a, const CoeffTensor& l) {
  if (a.arity() != l.arity() || a.dim() != l.dim()) throw std::invalid_argument("schur: shape mismatch");
  CoeffTensor out(l.arity(), l.dim());
  for (const auto& [i, c] : l.coeffs()) {
    const Complex w = a.coeff(i);
    if (w != Complex{}) out.set(i, w * c);
  }
  return out;
}

CoeffTensor materialize(const Mask& a) {
  if (core::index_set_size(a.arity(), a.dim(), kMaterializeBudget) == 0) {
    throw core::BudgetError("materialize: I(m,n) exceeds the materialization budget");
  }
  CoeffTensor out(a.arity(), a.dim());
  core::for_each_multi_index(a.arity(), a.dim(), [&](const MultiIndex& i) {
    const Complex w = a.entry(i);
    if (w != Complex{}) out.set(i, w);
  });
  return out;
}

}  // namespace polarlab::shuffle
