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

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polarlab/core/estimate.hpp"
#include "polarlab/core/matrix.hpp"
#include "polarlab/norms/parallel.hpp"

namespace polarlab::bounds {

using core::ComplexMatrix;
using core::EstimateReport;

/// Operators v_ij = (1/(i-j)) e_i (x) e_j + (1/(j-i)) e_j (x) e_i on l_2^n and
/// the block layout ((k-1)b, kb], b = floor(2n/m), used for even m.
struct BourgainFamily {
  int n = 0;
  int block_size = 0;
  std::vector<std::pair<int, int>> blocks;  ///< (lo, hi]: 1-based, lo exclusive

  BourgainFamily(int n, int m);

  /// v_ij as an n x n matrix (1-based i != j).
  [[nodiscard]] static ComplexMatrix v(int n, int i, int j);

  /// sum_{i<j} v_ij x_i x_j on l_2^b.
  [[nodiscard]] static ComplexMatrix coupled(std::span<const core::Complex> x);
  /// sum_{i<j} v_ij x_i y_j on l_2^b.
  [[nodiscard]] static ComplexMatrix decoupled(std::span<const core::Complex> x, std::span<const core::Complex> y);
};

struct BourgainOptions {
  std::int64_t samples = 10000;
  std::uint64_t seed = norms::kDefaultSeed;
  int threads = 1;
};

struct BourgainIntegrals {
  int n = 0;
  EstimateReport one_variable;  ///< E ||sum v_ij x_i x_j||
  EstimateReport two_variable;  ///< E ||sum v_ij x_i y_j||
  double lower_target = 0.0;    ///< log n - pi
  bool one_variable_below_pi = false;    ///< estimate - CI <= pi
  bool two_variable_above_target = false;  ///< estimate + CI >= log n - pi
  [[nodiscard]] double ratio() const { return two_variable.value / one_variable.value; }
};

/// Monte Carlo estimates of both integrals on T^n (resp. T^n x T^n). Each
/// sample costs one power iteration on an n x n matrix. Requires n >= 2.
[[nodiscard]] BourgainIntegrals bourgain_integrals(int n, const BourgainOptions& opts = {});

struct BourgainLowerBound {
  int m = 0;
  int n = 0;
  int block_size = 0;
  EstimateReport statistic;  ///< prod I2_k / prod I1_k with first-order CI
  std::vector<BourgainIntegrals> factors;
  bool hypothesis_holds = false;           ///< log b >= pi
  std::optional<double> closed_form;       ///< ((log b - pi)/pi)^{m/2}, when the hypothesis holds
  std::optional<bool> meets_closed_form;   ///< statistic + CI >= closed_form
};

/// Block construction for even m: the integrand is an elementary tensor over
/// m/2 disjoint blocks of size b = floor(2n/m), so both integrals factor into
/// per-block integrals, each estimated with samples/(m/2) draws on its own
/// streams. For m = 2 this is exactly bourgain_integrals(n).
[[nodiscard]] BourgainLowerBound bourgain_lower_bound(int m, int n, const BourgainOptions& opts = {});

}  // namespace polarlab::bounds
