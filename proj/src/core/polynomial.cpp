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

#include "polarlab/core/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polarlab::core {

HomPolynomial::HomPolynomial(int m, int n) : m_(m), n_(n) {
  if (m < 1 || m > kMaxArity) throw std::invalid_argument("HomPolynomial: degree out of range");
  if (n < 1) throw std::invalid_argument("HomPolynomial: dimension must be >= 1");
}

void HomPolynomial::check_key(const MultiIndex& j) const {
  if (j.arity() != m_ || j.dim() != n_) {
    throw std::invalid_argument("HomPolynomial: key " + j.to_string() + " has wrong shape");
  }
  if (!j.is_nondecreasing()) {
    throw std::invalid_argument("HomPolynomial: key " + j.to_string() + " is not nondecreasing");
  }
}

void HomPolynomial::set(const MultiIndex& j, Complex c) {
  check_key(j);
  coeffs_[j] = c;
}

void HomPolynomial::add(const MultiIndex& j, Complex c) {
  check_key(j);
  // First insertion assigns so a lone -0.0 keeps its sign.
  auto [it, inserted] = coeffs_.try_emplace(j, c);
  if (!inserted) it->second += c;
}

Complex HomPolynomial::coeff(const MultiIndex& j) const {
  if (j.arity() != m_ || j.dim() != n_) throw std::invalid_argument("HomPolynomial: key has wrong shape");
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? Complex{} : it->second;
}

HomPolynomial HomPolynomial::product(int m, int n) {
  if (n < m) throw std::invalid_argument("HomPolynomial::product: need n >= m");
  std::vector<int> idx(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) idx[static_cast<std::size_t>(k)] = k + 1;
  HomPolynomial p(m, n);
  p.set(MultiIndex(idx, n), 1.0);
  return p;
}

double max_abs_diff(const HomPolynomial& a, const HomPolynomial& b) {
  if (a.degree() != b.degree() || a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (const auto& [j, c] : a.coeffs()) worst = std::max(worst, std::abs(c - b.coeff(j)));
  for (const auto& [j, c] : b.coeffs()) {
    if (!a.coeffs().contains(j)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

Complex eval_polynomial(const HomPolynomial& p, std::span<const Complex> x) {
  if (static_cast<int>(x.size()) != p.dim()) {
    throw std::invalid_argument("eval_polynomial: vector length " + std::to_string(x.size()) + " != n = " +
                                std::to_string(p.dim()));
  }
  Complex total{};
  for (const auto& [j, c] : p.coeffs()) {
    Complex term = c;
    for (int s = 0; s < p.degree(); ++s) term *= x[static_cast<std::size_t>(j[s] - 1)];
    total += term;
  }
  return total;
}

ComplexVector polynomial_gradient(const HomPolynomial& p, std::span<const Complex> x) {
  if (static_cast<int>(x.size()) != p.dim()) throw std::invalid_argument("polynomial_gradient: dimension mismatch");
  const int m = p.degree();
  ComplexVector grad(x.size());
  std::vector<Complex> prefix(static_cast<std::size_t>(m) + 1);
  std::vector<Complex> suffix(static_cast<std::size_t>(m) + 1);
  for (const auto& [j, c] : p.coeffs()) {
    // Leave-one-out products avoid dividing by a zero coordinate.
    prefix[0] = 1.0;
    for (int s = 0; s < m; ++s) prefix[static_cast<std::size_t>(s) + 1] = prefix[static_cast<std::size_t>(s)] * x[static_cast<std::size_t>(j[s] - 1)];
    suffix[static_cast<std::size_t>(m)] = 1.0;
    for (int s = m - 1; s >= 0; --s) suffix[static_cast<std::size_t>(s)] = suffix[static_cast<std::size_t>(s) + 1] * x[static_cast<std::size_t>(j[s] - 1)];
    for (int s = 0; s < m; ++s) {
      grad[static_cast<std::size_t>(j[s] - 1)] += c * prefix[static_cast<std::size_t>(s)] * suffix[static_cast<std::size_t>(s) + 1];
    }
  }
  return grad;
}

Complex eval_mform(const CoeffTensor& l, std::span<const ComplexVector> xs) {
  if (static_cast<int>(xs.size()) != l.arity()) {
    throw std::invalid_argument("eval_mform: got " + std::to_string(xs.size()) + " vectors, arity is " +
                                std::to_string(l.arity()));
  }
  for (const auto& x : xs) {
    if (static_cast<int>(x.size()) != l.dim()) throw std::invalid_argument("eval_mform: vector length != n");
  }
  Complex total{};
  for (const auto& [i, c] : l.coeffs()) {
    Complex term = c;
    for (int s = 0; s < l.arity(); ++s) term *= xs[static_cast<std::size_t>(s)][static_cast<std::size_t>(i[s] - 1)];
    total += term;
  }
  return total;
}

CoeffTensor build_LP(const HomPolynomial& p) {
  CoeffTensor l(p.degree(), p.dim());
  for (const auto& [j, c] : p.coeffs()) l.set(j, c);
  return l;
}

HomPolynomial diagonal_restriction(const CoeffTensor& l) {
  HomPolynomial p(l.arity(), l.dim());
  for (const auto& [i, c] : l.coeffs()) p.add(i.sorted(), c);
  return p;
}

HomPolynomial random_polynomial(int m, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  HomPolynomial p(m, n);
  for_each_nondecreasing_index(m, n, [&](const MultiIndex& j) {
    const double re = g(rng);
    const double im = g(rng);
    p.set(j, {re, im});
  });
  return p;
}

CoeffTensor random_tensor(int m, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CoeffTensor t(m, n);
  for_each_multi_index(m, n, [&](const MultiIndex& i) {
    const double re = g(rng);
    const double im = g(rng);
    t.set(i, {re, im});
  });
  return t;
}

}  // namespace polarlab::core
