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
#include <vector>

#include "polarlab/core/estimate.hpp"
#include "polarlab/core/polynomial.hpp"
#include "polarlab/norms/sup_estimate.hpp"

namespace polarlab::bounds {

using core::EstimateReport;
using core::HomPolynomial;
using norms::BallSpec;

/// Closed-form upper bound for the lift constant:
///   2^{m-1} e^m m! mubar^{m-1},  mubar = log2(2n),
/// together with the smoothed growth shape m^m (log n)^{m-1} (up to c_1^m).
struct UpperCertificate {
  int m = 0;
  int n = 0;
  double mu_bar = 0.0;
  double log_value = 0.0;  ///< natural log of value, finite even when value overflows
  double value = 0.0;      ///< +inf if it overflows a double
  double smoothed_shape = 0.0;
};

[[nodiscard]] UpperCertificate upper_bound_certificate(int m, int n);

/// One link S_{k-1} L_P -> S_k L_P of the certificate chain.
struct ChainStep {
  int k = 0;
  double sup_prev = 0.0;  ///< lower estimate of sup|S_{k-1} L_P|
  double sup_next = 0.0;  ///< lower estimate of sup|S_k L_P|
  double factor = 0.0;    ///< 2(m-k+1) log2(2n)
  bool holds = false;
};

/// Two-sided report for one (m, n, p) experiment.
struct BoundReport {
  int m = 0;
  int n = 0;
  core::PExponent p = core::PExponent::infinity();
  EstimateReport lower;  ///< lower statistic for the lift constant
  double upper = 0.0;    ///< closed-form upper bound
  std::vector<ChainStep> chain;
  /// sup|B| <= e^m sup|P| (1 + slack), with B = S_{m-1} L_P.
  std::optional<bool> endpoint_holds;
  double sup_poly = 0.0;
  double sup_sym = 0.0;
  bool passed = false;
};

struct ChainOptions {
  int restarts = 64;
  int iters = 200;
  std::uint64_t seed = norms::kDefaultSeed;
  int threads = 1;
  double slack = 0.05;
};

/// Heuristic gate on the upper-bound chain. Every sup is an ascent lower
/// bound, so each inequality is checked as
///   lower(LHS) <= factor * lower(RHS) * (1 + slack);
/// the slack absorbs estimator shortfall on the right-hand side. This is a
/// sanity check, not a proof. Requires m <= 5, n <= 6.
[[nodiscard]] BoundReport chain_check(const HomPolynomial& p, BallSpec ball, const ChainOptions& opts = {});

/// sup|L_P| / sup|P| for P = x_1 ... x_m on C^m under l_p. The numerator is
/// the alternating-ascent certificate (value 1 at canonical vectors); the
/// denominator is the Lagrange value m^{-m/p}, cross-checked by sup_poly_ball.
/// Throws std::runtime_error if either estimator disagrees with its closed
/// form by more than 1e-6.
[[nodiscard]] EstimateReport product_poly_ratio(int m, core::PExponent p, const norms::AscentOptions& opts = {});

}  // namespace polarlab::bounds
