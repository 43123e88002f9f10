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
#include <string>

#include "polarlab/core/coeff_tensor.hpp"

namespace polarlab::shuffle {

using core::CoeffTensor;
using core::Complex;
using core::MultiIndex;

/// An element of C^{I(m,n)} given by a pure entry function. Masks are never
/// stored densely unless `materialize` is called.
class Mask {
 public:
  using Entry = std::function<Complex(const MultiIndex&)>;

  Mask(int m, int n, Entry entry, std::string label);

  [[nodiscard]] int arity() const { return m_; }
  [[nodiscard]] int dim() const { return n_; }
  [[nodiscard]] const std::string& label() const { return label_; }

  [[nodiscard]] Complex entry(const MultiIndex& i) const;
  [[nodiscard]] Complex operator()(const MultiIndex& i) const { return entry(i); }

  [[nodiscard]] static Mask constant(int m, int n, Complex value);
  [[nodiscard]] static Mask ones(int m, int n) { return constant(m, n, 1.0); }

 private:
  int m_;
  int n_;
  Entry entry_;
  std::string label_;
};

/// Entrywise (Schur) product and sums in C^{I(m,n)}.
[[nodiscard]] Mask operator*(const Mask& a, const Mask& b);
[[nodiscard]] Mask operator+(const Mask& a, const Mask& b);
[[nodiscard]] Mask operator*(Complex s, const Mask& a);

/// D^{u,v}: 1 where i_u = i_v. Slots u, v are 1-based.
[[nodiscard]] Mask mask_D(int m, int n, int u, int v);
/// T^{u,v}: 1 where i_u <= i_v.
[[nodiscard]] Mask mask_T(int m, int n, int u, int v);

/// R_k from its entry formula:
///   (m-k+1)(1 + sum_{u=1}^{m-k} [i_k = i_{k+u}] (1/(u+1) - 1/u)) if i_k <= i_{k+1}, else 0.
[[nodiscard]] Mask mask_R(int m, int n, int k);

/// R_k assembled from the D/T algebra:
///   (m-k+1) T^{k,k+1} * (1 + sum_u (1/(u+1) - 1/u) D^{k,k+u}).
[[nodiscard]] Mask mask_R_factored(int m, int n, int k);

/// c_i(A * L) = c_i(A) c_i(L). Only the support of L is visited.
[[nodiscard]] CoeffTensor schur(const Mask& a, const CoeffTensor& l);
[[nodiscard]] CoeffTensor schur(const CoeffTensor& a, const CoeffTensor& l);

/// Dense copy over all of I(m,n); zero entries are skipped. Budgeted.
[[nodiscard]] CoeffTensor materialize(const Mask& a);

}  // namespace polarlab::shuffle
