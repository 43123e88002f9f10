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

#include <complex>
#include <map>

#include "polarlab/core/multi_index.hpp"

namespace polarlab::core {

using Complex = std::complex<double>;

/// Tolerance for identities that hold exactly in rational arithmetic.
inline constexpr double kTauExact = 1e-12;
/// Tolerance for round trips through floating-point evaluation sums.
inline constexpr double kTauEval = 1e-9;

/// Sparse coefficient tensor over I(m,n); absent keys are zero.
///
/// Represents an m-linear form L via c_i(L), and is also the carrier for
/// Schur masks once they are materialized.
class CoeffTensor {
 public:
  using Map = std::map<MultiIndex, Complex>;

  CoeffTensor(int m, int n);

  [[nodiscard]] int arity() const { return m_; }
  [[nodiscard]] int dim() const { return n_; }

  [[nodiscard]] Complex coeff(const MultiIndex& i) const;
  void set(const MultiIndex& i, Complex c);
  void add(const MultiIndex& i, Complex c);

  [[nodiscard]] const Map& coeffs() const { return coeffs_; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] bool empty() const { return coeffs_.empty(); }

  /// Drops entries with modulus <= tol.
  void prune(double tol = 0.0);

  CoeffTensor& operator*=(Complex s);
  CoeffTensor& operator+=(const CoeffTensor& other);

 private:
  void check_key(const MultiIndex& i) const;

  int m_;
  int n_;
  Map coeffs_;
};

[[nodiscard]] CoeffTensor operator+(CoeffTensor a, const CoeffTensor& b);
[[nodiscard]] CoeffTensor operator-(CoeffTensor a, const CoeffTensor& b);
[[nodiscard]] CoeffTensor operator*(Complex s, CoeffTensor a);

/// max_i |c_i(a) - c_i(b)| over the union of supports. Shapes must match.
[[nodiscard]] double max_abs_diff(const CoeffTensor& a, const CoeffTensor& b);

[[nodiscard]] inline bool approx_equal(const CoeffTensor& a, const CoeffTensor& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

/// True when c_i = c_{i∘π} for every slot permutation π, within tol.
[[nodiscard]] bool is_slot_symmetric(const CoeffTensor& t, double tol);

}  // namespace polarlab::core
