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

#include <map>
#include <random>
#include <span>
#include <vector>

#include "polarlab/core/coeff_tensor.hpp"

namespace polarlab::core {

using ComplexVector = std::vector<Complex>;

/// m-homogeneous polynomial on C^n, P(x) = sum_j c_j x_{j_1}...x_{j_m}, keyed
/// by nondecreasing multi-indices j.
class HomPolynomial {
 public:
  using Map = std::map<MultiIndex, Complex>;

  HomPolynomial(int m, int n);

  [[nodiscard]] int degree() const { return m_; }
  [[nodiscard]] int dim() const { return n_; }

  /// Throws std::invalid_argument unless `j` is nondecreasing with matching shape.
  void set(const MultiIndex& j, Complex c);
  void add(const MultiIndex& j, Complex c);
  [[nodiscard]] Complex coeff(const MultiIndex& j) const;

  [[nodiscard]] const Map& coeffs() const { return coeffs_; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  /// x_1 x_2 ... x_m on C^n (n >= m).
  [[nodiscard]] static HomPolynomial product(int m, int n);

 private:
  void check_key(const MultiIndex& j) const;

  int m_;
  int n_;
  Map coeffs_;
};

[[nodiscard]] double max_abs_diff(const HomPolynomial& a, const HomPolynomial& b);

/// P(x). Throws std::invalid_argument on length mismatch.
[[nodiscard]] Complex eval_polynomial(const HomPolynomial& p, std::span<const Complex> x);

/// dP/dx_j for j = 1..n (holomorphic gradient), returned 0-based.
[[nodiscard]] ComplexVector polynomial_gradient(const HomPolynomial& p, std::span<const Complex> x);

/// L(x^(1),...,x^(m)) = sum_i c_i(L) x^(1)_{i_1} ... x^(m)_{i_m}.
[[nodiscard]] Complex eval_mform(const CoeffTensor& l, std::span<const ComplexVector> xs);

/// The non-symmetric lift L_P: slot k carries the k-th entry of each
/// nondecreasing monomial index.
[[nodiscard]] CoeffTensor build_LP(const HomPolynomial& p);

/// x -> L(x,...,x), collected onto nondecreasing keys.
[[nodiscard]] HomPolynomial diagonal_restriction(const CoeffTensor& l);

/// Dense random polynomial: every monomial gets re, im ~ N(0, 1).
[[nodiscard]] HomPolynomial random_polynomial(int m, int n, std::mt19937_64& rng);

/// Dense random m-form over I(m, n), entries as above.
[[nodiscard]] CoeffTensor random_tensor(int m, int n, std::mt19937_64& rng);

}  // namespace polarlab::core
