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

#include "polarlab/shuffle/recursion.hpp"

#include <algorithm>
#include <vector>

#include "polarlab/core/errors.hpp"
#include "polarlab/shuffle/symmetrize.hpp"

namespace polarlab::shuffle {

std::string to_string(RecursionCounterexample::Kind kind) {
  return kind == RecursionCounterexample::Kind::recursion ? "recursion" : "support";
}

RecursionReport recursion_check(const core::HomPolynomial& p, const WeightFactory& weight) {
  const int m = p.degree();
  const int n = p.dim();
  if (m > kRecursionMaxArity || n > kRecursionMaxDim) {
    throw core::BudgetError("recursion_check: (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") exceeds the exact enumeration budget m <= 6, n <= 5");
  }
  double scale = 1.0;
  for (const auto& [j, c] : p.coeffs()) scale = std::max(scale, std::abs(c));
  const double tol = core::kTauExact * scale;

  const CoeffTensor lp = core::build_LP(p);
  std::vector<CoeffTensor> shuffled;
  shuffled.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) shuffled.push_back(shuffle(lp, k));

  RecursionReport report;
  auto fail = [&](RecursionCounterexample cx) {
    report.passed = false;
    report.counterexample = cx;
  };

  // Support: nonzero c_i(S_k L_P) forces i_{k+1} <= ... <= i_m.
  for (int k = 0; k < m && report.passed; ++k) {
    for (const auto& [i, c] : shuffled[static_cast<std::size_t>(k)].coeffs()) {
      ++report.checks;
      if (std::abs(c) <= tol) continue;
      bool sorted_tail = true;
      for (int s = k + 1; s < m; ++s) sorted_tail = sorted_tail && i[s - 1] <= i[s];
      if (!sorted_tail) {
        fail({RecursionCounterexample::Kind::support, k, i, Complex{}, c});
        break;
      }
    }
  }

  for (int k = 1; k < m && report.passed; ++k) {
    const Mask r = weight(m, n, k);
    const CoeffTensor& prev = shuffled[static_cast<std::size_t>(k - 1)];
    const CoeffTensor& cur = shuffled[static_cast<std::size_t>(k)];
    core::for_each_multi_index(m, n, [&](const MultiIndex& i) {
      if (!report.passed) return;
      ++report.checks;
      const Complex expected = prev.coeff(i);
      const Complex actual = r.entry(i) * cur.coeff(i);
      if (std::abs(expected - actual) > tol) fail({RecursionCounterexample::Kind::recursion, k, i, expected, actual});
    });
  }
  return report;
}

}  // namespace polarlab::shuffle
