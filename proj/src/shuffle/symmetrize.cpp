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

#include "polarlab/shuffle/symmetrize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "polarlab/core/errors.hpp"

namespace polarlab::shuffle {

using core::Complex;
using core::MultiIndex;

namespace {

constexpr std::size_t kPolarizationBudget = std::size_t{1} << 22;

std::array<int, core::kMaxArity> entries_of(const MultiIndex& i) {
  std::array<int, core::kMaxArity> out{};
  for (int s = 0; s < i.arity(); ++s) out[static_cast<std::size_t>(s)] = i[s];
  return out;
}

MultiIndex make_index(const std::array<int, core::kMaxArity>& e, int m, int n) {
  return MultiIndex(std::span<const int>(e.data(), static_cast<std::size_t>(m)), n);
}

void check_k(int m, int k, int lo, const char* who) {
  if (k < lo || k > m - 1) {
    throw std::out_of_range(std::string(who) + ": k = " + std::to_string(k) + " outside " + std::to_string(lo) +
                            ".." + std::to_string(m - 1));
  }
}

double factorial(int m) {
  double f = 1.0;
  for (int t = 2; t <= m; ++t) f *= t;
  return f;
}

}  // namespace

CoeffTensor permute_indices(const CoeffTensor& l, const Permutation& sigma) {
  const int m = l.arity();
  if (sigma.size() != m) throw std::invalid_argument("permute_indices: permutation size != arity");
  CoeffTensor out(m, l.dim());
  std::array<int, core::kMaxArity> j{};
  for (const auto& [i, c] : l.coeffs()) {
    for (int t = 1; t <= m; ++t) j[static_cast<std::size_t>(t - 1)] = i[sigma.image(t) - 1];
    out.add(make_index(j, m, l.dim()), c);
  }
  return out;
}

CoeffTensor polarization_form(const HomPolynomial& p) {
  const int m = p.degree();
  const int n = p.dim();
  if (core::index_set_size(m, n, kPolarizationBudget) == 0 || m > 20) {
    throw core::BudgetError("polarization_form: index set I(m,n) too large");
  }
  CoeffTensor b(m, n);
  const double norm = 1.0 / (std::ldexp(1.0, m) * factorial(m));
  core::ComplexVector z(static_cast<std::size_t>(n));

  // B is symmetric, so one evaluation per orbit; the orbit representative is
  // the nondecreasing key.
  core::for_each_nondecreasing_index(m, n, [&](const MultiIndex& rep) {
    Complex acc{};
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::fill(z.begin(), z.end(), Complex{});
      int sign = 1;
      for (int t = 0; t < m; ++t) {
        const bool neg = (mask >> t) & 1u;
        z[static_cast<std::size_t>(rep[t] - 1)] += neg ? -1.0 : 1.0;
        if (neg) sign = -sign;
      }
      acc += static_cast<double>(sign) * core::eval_polynomial(p, z);
    }
    const Complex coeff = acc * norm;
    if (coeff == Complex{}) return;
    std::array<int, core::kMaxArity> e = entries_of(rep);
    do {
      b.set(make_index(e, m, n), coeff);
    } while (std::next_permutation(e.begin(), e.begin() + m));
  });
  return b;
}

CoeffTensor symmetrize_average(const CoeffTensor& l) {
  const int m = l.arity();
  const auto perms = all_permutations(m);  // enforces the m <= 8 guard
  const double w = 1.0 / static_cast<double>(perms.size());
  CoeffTensor out(m, l.dim());
  std::array<int, core::kMaxArity> j{};
  for (const auto& sigma : perms) {
    // L(x^sigma(1), ..., x^sigma(m)): slot sigma(t) receives entry i_t.
    for (const auto& [i, c] : l.coeffs()) {
      for (int t = 1; t <= m; ++t) j[static_cast<std::size_t>(sigma.image(t) - 1)] = i[t - 1];
      out.add(make_index(j, m, l.dim()), c * w);
    }
  }
  return out;
}

CoeffTensor shuffle_step(const CoeffTensor& l, int k) {
  const int m = l.arity();
  check_k(m, k, 1, "shuffle_step");
  const double w = 1.0 / static_cast<double>(m - k + 1);
  CoeffTensor out(m, l.dim());
  std::array<int, core::kMaxArity> i{};
  for (const auto& [j, c] : l.coeffs()) {
    // c_j feeds every i with (i_1..i_{k-1}, i_{k+1}..i_l, i_k, i_{l+1}..) = j,
    // i.e. i_k = j_l and i_{k+1..l} = j_{k..l-1}.
    for (int l_pos = k; l_pos <= m; ++l_pos) {
      for (int s = 1; s < k; ++s) i[static_cast<std::size_t>(s - 1)] = j[s - 1];
      i[static_cast<std::size_t>(k - 1)] = j[l_pos - 1];
      for (int s = k + 1; s <= l_pos; ++s) i[static_cast<std::size_t>(s - 1)] = j[s - 2];
      for (int s = l_pos + 1; s <= m; ++s) i[static_cast<std::size_t>(s - 1)] = j[s - 1];
      out.add(make_index(i, m, l.dim()), c * w);
    }
  }
  return out;
}

CoeffTensor shuffle(const CoeffTensor& l, int k) {
  const int m = l.arity();
  check_k(m, k, 0, "shuffle");
  if (k == 0) return l;
  const PermDistribution dist = fy_distribution(m, k);
  CoeffTensor out(m, l.dim());
  std::array<int, core::kMaxArity> j{};
  for (const auto& [sigma, prob] : dist.probs) {
    for (const auto& [i, c] : l.coeffs()) {
      for (int t = 1; t <= m; ++t) j[static_cast<std::size_t>(t - 1)] = i[sigma.image(t) - 1];
      out.add(make_index(j, m, l.dim()), c * prob);
    }
  }
  return out;
}

CoeffTensor shuffle_by_steps(const CoeffTensor& l, int k) {
  check_k(l.arity(), k, 0, "shuffle_by_steps");
  CoeffTensor cur = l;
  for (int step = 1; step <= k; ++step) cur = shuffle_step(cur, step);
  return cur;
}

}  // namespace polarlab::shuffle
