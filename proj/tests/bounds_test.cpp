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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "polarlab/bounds/bourgain.hpp"
#include "polarlab/bounds/certificates.hpp"
#include "polarlab/core/errors.hpp"
#include "polarlab/core/polynomial.hpp"

namespace pb = polarlab::bounds;
namespace pc = polarlab::core;
using pc::Complex;
using pc::ComplexVector;
using pc::MultiIndex;
using pc::PExponent;

// ------------------------------------------------------------ upper certificate

TEST(UpperCertificate, Examples) {
  EXPECT_NEAR(pb::upper_bound_certificate(1, 5).value, std::exp(1.0), 1e-12);
  const double e2 = std::exp(2.0);
  EXPECT_NEAR(pb::upper_bound_certificate(2, 8).value, 16.0 * e2, 1e-10);
  EXPECT_NEAR(16.0 * e2, 118.2, 0.05);
}

TEST(UpperCertificate, MonotoneAndAboveExpM) {
  for (int m = 1; m <= 10; ++m) {
    for (int n : {1, 2, 7, 64, 1000}) {
      const auto c = pb::upper_bound_certificate(m, n);
      EXPECT_GE(c.value, std::exp(static_cast<double>(m)) * (1.0 - 1e-12));
      if (m > 1) {
        EXPECT_GT(pb::upper_bound_certificate(m, 2 * n).value, c.value);
      }
    }
  }
}

TEST(UpperCertificate, LogSpaceSurvivesOverflow) {
  const auto c = pb::upper_bound_certificate(200, 50);
  EXPECT_TRUE(std::isfinite(c.log_value));
  EXPECT_TRUE(std::isinf(c.value));
  EXPECT_THROW((void)pb::upper_bound_certificate(0, 3), std::invalid_argument);
}

// ------------------------------------------------------------ chain check

TEST(ChainCheck, ProductPolynomial) {
  const pb::BoundReport r = pb::chain_check(pc::HomPolynomial::product(3, 3), {});
  EXPECT_TRUE(r.passed);
  ASSERT_EQ(r.chain.size(), 2u);
  for (const auto& s : r.chain) EXPECT_TRUE(s.holds);
  EXPECT_NEAR(r.sup_poly, 1.0, 1e-9);
}

TEST(ChainCheck, SquareIsAFixedPoint) {
  pc::HomPolynomial p(2, 2);
  p.set(MultiIndex({1, 1}, 2), 1.0);
  const pb::BoundReport r = pb::chain_check(p, {});
  EXPECT_TRUE(r.passed);
  ASSERT_EQ(r.chain.size(), 1u);
  EXPECT_NEAR(r.chain.front().sup_prev, r.chain.front().sup_next, 1e-9);
}

TEST(ChainCheck, RandomCubic) {
  std::mt19937_64 rng(91);
  const pb::BoundReport r = pb::chain_check(pc::random_polynomial(3, 4, rng), {});
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.endpoint_holds.value_or(false));
  EXPECT_LE(r.lower.value, r.upper);
}

TEST(ChainCheck, BudgetGuard) {
  EXPECT_THROW((void)pb::chain_check(pc::HomPolynomial(6, 2), {}), pc::BudgetError);
  EXPECT_THROW((void)pb::chain_check(pc::HomPolynomial(2, 7), {}), pc::BudgetError);
}

// ------------------------------------------------------------ product ratio

TEST(ProductRatio, Examples) {
  EXPECT_NEAR(pb::product_poly_ratio(2, PExponent::finite(1.0)).value, 4.0, 1e-6);
  EXPECT_NEAR(pb::product_poly_ratio(3, PExponent::finite(1.5)).value, 9.0, 1e-6);
  for (double p : {1.0, 2.0, 5.0}) EXPECT_NEAR(pb::product_poly_ratio(1, PExponent::finite(p)).value, 1.0, 1e-12);
}

TEST(ProductRatio, ClosedFormUpToDegreeFour) {
  for (int m = 1; m <= 4; ++m) {
    for (double p : {1.0, 1.25, 1.5, 1.75, 2.0, 3.0}) {
      const auto r = pb::product_poly_ratio(m, PExponent::finite(p));
      EXPECT_NEAR(r.value, std::pow(m, m / p), 1e-6 * std::pow(m, m / p));
      EXPECT_EQ(r.direction, pc::Direction::certified_lower_bound);
    }
  }
}

// ------------------------------------------------------------ Bourgain family

TEST(BourgainFamily, GeneratorNorms) {
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      if (i == j) continue;
      const pc::ComplexMatrix v = pb::BourgainFamily::v(5, i, j);
      EXPECT_NEAR(pc::spectral_norm(v).value, 1.0 / std::abs(i - j), 1e-10);
      EXPECT_EQ(v(i - 1, j - 1), -v(j - 1, i - 1));
    }
  }
  EXPECT_THROW((void)pb::BourgainFamily::v(5, 2, 2), std::invalid_argument);
}

TEST(BourgainFamily, BlocksPartitionTheLeadingCoordinates) {
  const pb::BourgainFamily f(13, 4);
  EXPECT_EQ(f.block_size, 6);
  ASSERT_EQ(f.blocks.size(), 2u);
  EXPECT_EQ(f.blocks[0], std::make_pair(0, 6));
  EXPECT_EQ(f.blocks[1], std::make_pair(6, 12));
  EXPECT_THROW(pb::BourgainFamily(10, 3), std::invalid_argument);
  EXPECT_THROW(pb::BourgainFamily(3, 4), std::invalid_argument);
}

TEST(BourgainFamily, CoupledSumIsASimilarityOfTheHilbertKernel) {
  // sum_{i<j} v_ij x_i x_j = D H D with D = diag(x) unitary on the torus.
  const int n = 9;
  pc::ComplexMatrix h(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) h(a, b) = 1.0 / (a - b);
    }
  }
  const double kernel = pc::spectral_norm(h).value;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int t = 0; t < 5; ++t) {
    ComplexVector x(n);
    for (auto& z : x) z = std::polar(1.0, angle(rng));
    EXPECT_NEAR(pc::spectral_norm(pb::BourgainFamily::coupled(x)).value, kernel, 1e-8);
  }
}

// ------------------------------------------------------------ Bourgain integrals

TEST(BourgainIntegrals, TwoCoordinatesAreConstant) {
  pb::BourgainOptions o;
  o.samples = 500;
  const pb::BourgainIntegrals r = pb::bourgain_integrals(2, o);
  EXPECT_NEAR(r.one_variable.value, 1.0, 1e-10);
  EXPECT_NEAR(r.two_variable.value, 1.0, 1e-10);
  EXPECT_LE(r.one_variable.ci_halfwidth, 1e-9);
  EXPECT_LE(r.two_variable.ci_halfwidth, 1e-9);
  EXPECT_THROW((void)pb::bourgain_integrals(1, o), std::invalid_argument);
}

TEST(BourgainIntegrals, DecoupledDominatesAtModerateN) {
  pb::BourgainOptions o;
  o.samples = 1000;
  for (int n : {24, 32}) {
    const pb::BourgainIntegrals r = pb::bourgain_integrals(n, o);
    EXPECT_GE(r.two_variable.value, r.one_variable.value - r.one_variable.ci_halfwidth) << n;
    EXPECT_TRUE(r.one_variable_below_pi);
    EXPECT_TRUE(r.two_variable_above_target);
  }
}

TEST(BourgainIntegrals, ReproducibleAcrossRunsAndThreads) {
  pb::BourgainOptions o;
  o.samples = 600;
  const pb::BourgainIntegrals a = pb::bourgain_integrals(12, o);
  const pb::BourgainIntegrals b = pb::bourgain_integrals(12, o);
  o.threads = 3;
  const pb::BourgainIntegrals c = pb::bourgain_integrals(12, o);
  EXPECT_EQ(a.two_variable.value, b.two_variable.value);
  EXPECT_EQ(a.two_variable.value, c.two_variable.value);
  EXPECT_EQ(a.one_variable.value, c.one_variable.value);
  EXPECT_EQ(a.two_variable.ci_halfwidth, c.two_variable.ci_halfwidth);
}

TEST(BourgainLowerBound, DegreeTwoIsTheIntegralRatio) {
  pb::BourgainOptions o;
  o.samples = 800;
  const pb::BourgainIntegrals in = pb::bourgain_integrals(16, o);
  const pb::BourgainLowerBound lb = pb::bourgain_lower_bound(2, 16, o);
  EXPECT_NEAR(lb.statistic.value, in.ratio(), pc::kTauEval);
  EXPECT_EQ(lb.block_size, 16);
  EXPECT_FALSE(lb.hypothesis_holds);  // log 16 < pi
  EXPECT_FALSE(lb.closed_form.has_value());
}

TEST(BourgainLowerBound, DegreeFourMeetsClosedForm) {
  pb::BourgainOptions o;
  o.samples = 2000;
  const pb::BourgainLowerBound lb = pb::bourgain_lower_bound(4, 128, o);
  EXPECT_EQ(lb.block_size, 64);
  ASSERT_EQ(lb.factors.size(), 2u);
  ASSERT_TRUE(lb.hypothesis_holds);
  ASSERT_TRUE(lb.closed_form.has_value());
  const double closed = std::pow((std::log(64.0) - std::numbers::pi) / std::numbers::pi, 2.0);
  EXPECT_NEAR(*lb.closed_form, closed, 1e-12);
  EXPECT_GE(lb.statistic.value + lb.statistic.ci_halfwidth, closed);
  EXPECT_TRUE(lb.meets_closed_form.value_or(false));
  const double product = lb.factors[0].ratio() * lb.factors[1].ratio();
  EXPECT_NEAR(lb.statistic.value, product, 1e-12 * product);
}

TEST(BourgainLowerBound, RejectsBadShapes) {
  EXPECT_THROW((void)pb::bourgain_lower_bound(3, 20), std::invalid_argument);
  EXPECT_THROW((void)pb::bourgain_lower_bound(6, 5), std::invalid_argument);
}
