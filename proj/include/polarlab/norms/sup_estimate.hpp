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
#include <vector>

#include "polarlab/core/coeff_tensor.hpp"
#include "polarlab/core/estimate.hpp"
#include "polarlab/core/lp_norm.hpp"
#include "polarlab/core/polynomial.hpp"
#include "polarlab/norms/parallel.hpp"

namespace polarlab::norms {

using core::CoeffTensor;
using core::ComplexVector;
using core::EstimateReport;
using core::HomPolynomial;
using core::PExponent;

/// The l_p unit ball of C^n; the only 1-unconditional family supported.
struct BallSpec {
  PExponent p = PExponent::infinity();
};

struct AscentOptions {
  int restarts = 32;
  int iters = 200;
  double tol = 1e-10;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  /// Extra starting points for m-linear ascent (m vectors each), tried after
  /// the structured start and before the random ones.
  std::vector<std::vector<ComplexVector>> warm_starts;
};

/// Lower-bound certificate for sup_{||x||_p <= 1} |P(x)|.
///
/// Multi-start ascent of log|P(z)| - m log||z||_p with an adaptive step
/// accepted only on improvement; for p = inf the search runs over phases on
/// the torus (the maximum over the polydisc is attained there). Restart 0
/// starts at the normalized all-ones vector.
[[nodiscard]] EstimateReport sup_poly_ball(const HomPolynomial& p, BallSpec ball, const AscentOptions& opts = {});

/// Result of one alternating-ascent run.
struct AscentRun {
  double value = 0.0;
  std::vector<ComplexVector> point;
  int sweeps = 0;
};

/// Cyclic slot-wise maximization from `start`. Each slot update replaces x^(s)
/// by the exact l_p-ball maximizer of the induced linear functional, so the
/// objective never decreases. A zero functional leaves the slot unchanged.
/// If `trace` is non-null, the objective after every slot update is appended.
[[nodiscard]] AscentRun alternating_ascent(const CoeffTensor& l, BallSpec ball, std::vector<ComplexVector> start,
                                           int max_sweeps, double tol, std::vector<double>* trace = nullptr);

/// Lower-bound certificate for sup over x^(k) in the ball of |L(x^(1),...,x^(m))|.
/// Restart 0 starts at the canonical vectors of the largest coefficient.
[[nodiscard]] EstimateReport sup_mform_ball(const CoeffTensor& l, BallSpec ball, const AscentOptions& opts = {});

/// A random point on the unit sphere of the ball (phases on the torus for p = inf).
[[nodiscard]] ComplexVector random_sphere_point(int n, BallSpec ball, std::mt19937_64& rng);

}  // namespace polarlab::norms
