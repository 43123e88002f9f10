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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "polarlab/core/errors.hpp"
#include "polarlab/core/polynomial.hpp"
#include "polarlab/shuffle/mask.hpp"
#include "polarlab/shuffle/permutation.hpp"
#include "polarlab/shuffle/recursion.hpp"
#include "polarlab/shuffle/symmetrize.hpp"

namespace pc = polarlab::core;
namespace ps = polarlab::shuffle;
using pc::CoeffTensor;
using pc::Complex;
using pc::ComplexVector;
using pc::MultiIndex;
using ps::Permutation;

namespace {

double factorial(int m) {
  double f = 1.0;
  for (int t = 2; t <= m; ++t) f *= t;
  return f;
}

ComplexVector basis(int n, int j) {
  ComplexVector e(static_cast<std::size_t>(n));
  e[static_cast<std::size_t>(j - 1)] = 1.0;
  return e;
}

// Law of the first k Fisher-Yates steps by brute force over all choice
// sequences (l_1, ..., l_k), l_j in [j, m]: step j takes the card at position
// l_j and reinserts it at position j.
std::map<std::vector<int>, double> deck_oracle(int m, int k) {
  std::map<std::vector<int>, double> law;
  std::vector<int> choice(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) choice[static_cast<std::size_t>(j)] = j + 1;
  double weight = 1.0;
  for (int j = 1; j <= k; ++j) weight /= (m - j + 1);
  while (true) {
    std::vector<int> deck(static_cast<std::size_t>(m));
    std::iota(deck.begin(), deck.end(), 1);
    for (int j = 1; j <= k; ++j) {
      const int l = choice[static_cast<std::size_t>(j - 1)];
      const int card = deck[static_cast<std::size_t>(l - 1)];
      deck.erase(deck.begin() + (l - 1));
      deck.insert(deck.begin() + (j - 1), card);
    }
    law[deck] += weight;
    int slot = k - 1;
    while (slot >= 0 && choice[static_cast<std::size_t>(slot)] == m) {
      choice[static_cast<std::size_t>(slot)] = slot + 1;
      --slot;
    }
    if (slot < 0) break;
    ++choice[static_cast<std::size_t>(slot)];
  }
  return law;
}

// c_i(T_k L) read off by evaluating the defining average on basis tuples.
CoeffTensor step_oracle(const CoeffTensor& l, int k) {
  const int m = l.arity();
  const int n = l.dim();
  CoeffTensor out(m, n);
  pc::for_each_multi_index(m, n, [&](const MultiIndex& i) {
    Complex acc{};
    for (int ll = k; ll <= m; ++ll) {
      std::vector<ComplexVector> xs;
      for (int t = 1; t < k; ++t) xs.push_back(basis(n, i[t - 1]));
      for (int t = k + 1; t <= ll; ++t) xs.push_back(basis(n, i[t - 1]));
      xs.push_back(basis(n, i[k - 1]));
      for (int t = ll + 1; t <= m; ++t) xs.push_back(basis(n, i[t - 1]));
      acc += pc::eval_mform(l, xs);
    }
    acc /= static_cast<double>(m - k + 1);
    if (acc != Complex{}) out.set(i, acc);
  });
  return out;
}

pc::HomPolynomial monomial(int m, int n, std::vector<int> idx) {
  pc::HomPolynomial p(m, n);
  p.set(MultiIndex(idx, n), 1.0);
  return p;
}

}  // namespace

// ------------------------------------------------------------ permutations

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation({2, 3, 1}));
}

TEST(Permutation, GroupAxioms) {
  const auto all = ps::all_permutations(4);
  ASSERT_EQ(all.size(), 24u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  const Permutation e = Permutation::identity(4);
  for (const auto& a : all) {
    EXPECT_EQ(ps::compose(a, e), a);
    EXPECT_EQ(ps::compose(e, a), a);
    EXPECT_TRUE(ps::compose(a, a.inverse()).is_identity());
    for (std::size_t s = 0; s < all.size(); s += 5) {
      const auto& b = all[s];
      const auto& c = all[(s * 7 + 3) % all.size()];
      EXPECT_EQ(ps::compose(ps::compose(a, b), c), ps::compose(a, ps::compose(b, c)));
      for (int t = 1; t <= 4; ++t) EXPECT_EQ(ps::compose(a, b).image(t), a.image(b.image(t)));
    }
  }
}

TEST(Permutation, CycleConvention) {
  // (l l-1 ... k): k -> l, t -> t-1 for k < t <= l.
  const Permutation c = Permutation::cycle_down(5, 2, 4);
  EXPECT_EQ(c.one_based(), (std::vector<int>{1, 4, 2, 3, 5}));
  EXPECT_TRUE(Permutation::cycle_down(5, 3, 3).is_identity());
}

TEST(Permutation, EnumerationGuard) {
  EXPECT_THROW((void)ps::all_permutations(9), pc::BudgetError);
  try {
    (void)ps::all_permutations(9);
  } catch (const pc::BudgetError& e) {
    EXPECT_NE(std::string(e.what()).find("m <= 8"), std::string::npos);
  }
}

// ------------------------------------------------------------ Fisher-Yates laws

TEST(FyDistribution, SmallExamples) {
  const ps::PermDistribution d21 = ps::fy_distribution(2, 1);
  ASSERT_EQ(d21.probs.size(), 2u);
  EXPECT_DOUBLE_EQ(d21.prob(Permutation({1, 2})), 0.5);
  EXPECT_DOUBLE_EQ(d21.prob(Permutation({2, 1})), 0.5);

  const ps::PermDistribution d31 = ps::fy_distribution(3, 1);
  ASSERT_EQ(d31.probs.size(), 3u);
  for (const auto& images : {std::vector<int>{1, 2, 3}, std::vector<int>{2, 1, 3}, std::vector<int>{3, 1, 2}}) {
    EXPECT_NEAR(d31.prob(Permutation(images)), 1.0 / 3.0, 1e-15);
  }

  const ps::PermDistribution d32 = ps::fy_distribution(3, 2);
  ASSERT_EQ(d32.probs.size(), 6u);
  for (const auto& [s, p] : d32.probs) EXPECT_NEAR(p, 1.0 / 6.0, 1e-15);
}

TEST(FyDistribution, RangeChecks) {
  EXPECT_THROW((void)ps::fy_distribution(3, 0), std::out_of_range);
  EXPECT_THROW((void)ps::fy_distribution(3, 3), std::out_of_range);
  EXPECT_THROW((void)ps::fy_distribution(9, 2), pc::BudgetError);
}

TEST(FyDistribution, MatchesDeckSimulation) {
  for (int m = 2; m <= 6; ++m) {
    for (int k = 1; k < m; ++k) {
      const auto law = deck_oracle(m, k);
      const ps::PermDistribution d = ps::fy_distribution(m, k);
      ASSERT_EQ(d.probs.size(), law.size()) << "m=" << m << " k=" << k;
      for (const auto& [images, p] : law) EXPECT_NEAR(d.prob(Permutation(images)), p, pc::kTauExact);
      EXPECT_NEAR(d.total(), 1.0, pc::kTauExact);
    }
  }
}

TEST(FyDistribution, LastStepIsUniform) {
  for (int m = 2; m <= 7; ++m) {
    const ps::PermDistribution d = ps::fy_distribution(m, m - 1);
    ASSERT_EQ(static_cast<double>(d.probs.size()), factorial(m));
    for (const auto& [s, p] : d.probs) ASSERT_NEAR(p, 1.0 / factorial(m), pc::kTauExact) << "m=" << m;
  }
}

TEST(FyDistribution, LeadingImagesAreDrawnWithoutReplacement) {
  // (sigma(1), ..., sigma(k)) is uniform over ordered k-tuples of distinct values.
  for (int m = 2; m <= 6; ++m) {
    for (int k = 1; k < m; ++k) {
      std::map<std::vector<int>, double> marginal;
      for (const auto& [s, p] : ps::fy_distribution(m, k).probs) {
        std::vector<int> head;
        for (int t = 1; t <= k; ++t) head.push_back(s.image(t));
        marginal[head] += p;
      }
      const double tuples = factorial(m) / factorial(m - k);
      ASSERT_EQ(static_cast<double>(marginal.size()), tuples);
      for (const auto& [h, p] : marginal) EXPECT_NEAR(p, 1.0 / tuples, pc::kTauExact);
    }
  }
}

TEST(FyDistribution, SamplerFrequencies) {
  const int m = 4;
  const int k = 2;
  const int draws = 60000;
  std::mt19937_64 rng(2024);
  std::map<Permutation, int> counts;
  for (int t = 0; t < draws; ++t) ++counts[ps::sample_fy(m, k, rng)];
  const ps::PermDistribution d = ps::fy_distribution(m, k);
  ASSERT_EQ(counts.size(), d.probs.size());
  for (const auto& [s, p] : d.probs) {
    const double sd = std::sqrt(draws * p * (1.0 - p));
    EXPECT_NEAR(counts[s], draws * p, 5.0 * sd) << s.to_string();
  }
}

// ------------------------------------------------------------ symmetrization

TEST(PermuteIndices, IsARightAction) {
  std::mt19937_64 rng(8);
  const CoeffTensor l = pc::random_tensor(3, 2, rng);
  for (const auto& a : ps::all_permutations(3)) {
    for (const auto& b : ps::all_permutations(3)) {
      const CoeffTensor twice = ps::permute_indices(ps::permute_indices(l, a), b);
      EXPECT_LE(pc::max_abs_diff(twice, ps::permute_indices(l, ps::compose(a, b))), 0.0);
    }
  }
}

TEST(Polarization, Examples) {
  const CoeffTensor b2 = ps::polarization_form(pc::HomPolynomial::product(2, 2));
  EXPECT_NEAR(std::abs(b2.coeff(MultiIndex({1, 2}, 2)) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(b2.coeff(MultiIndex({2, 1}, 2)) - 0.5), 0.0, 1e-15);

  const CoeffTensor sq = ps::polarization_form(monomial(2, 2, {1, 1}));
  EXPECT_NEAR(std::abs(sq.coeff(MultiIndex({1, 1}, 2)) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sq.coeff(MultiIndex({1, 2}, 2))), 0.0, 1e-15);

  const CoeffTensor b3 = ps::polarization_form(pc::HomPolynomial::product(3, 3));
  for (const auto& s : ps::all_permutations(3)) {
    EXPECT_NEAR(std::abs(b3.coeff(MultiIndex(s.one_based(), 3)) - 1.0 / 6.0), 0.0, 1e-15);
  }
}

TEST(Polarization, IsTheSymmetricFormOnTheDiagonal) {
  std::mt19937_64 rng(41);
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const pc::HomPolynomial p = pc::random_polynomial(m, n, rng);
      const CoeffTensor b = ps::polarization_form(p);
      EXPECT_TRUE(pc::is_slot_symmetric(b, pc::kTauExact));
      EXPECT_LE(pc::max_abs_diff(pc::diagonal_restriction(b), p), pc::kTauEval);
      EXPECT_LE(pc::max_abs_diff(ps::symmetrize_average(pc::build_LP(p)), b), pc::kTauEval) << m << "," << n;
    }
  }
}

TEST(SymmetrizeAverage, Examples) {
  const CoeffTensor s = ps::symmetrize_average(pc::build_LP(pc::HomPolynomial::product(2, 2)));
  EXPECT_NEAR(std::abs(s.coeff(MultiIndex({1, 2}, 2)) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.coeff(MultiIndex({2, 1}, 2)) - 0.5), 0.0, 1e-15);

  std::mt19937_64 rng(42);
  const CoeffTensor sym = ps::symmetrize_average(pc::random_tensor(3, 3, rng));
  EXPECT_LE(pc::max_abs_diff(ps::symmetrize_average(sym), sym), pc::kTauExact);

  EXPECT_THROW((void)ps::symmetrize_average(CoeffTensor(9, 2)), pc::BudgetError);
}

TEST(SymmetrizeAverage, RecoversPolynomialOnDiagonal) {
  std::mt19937_64 rng(43);
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const pc::HomPolynomial p = pc::random_polynomial(m, n, rng);
      EXPECT_LE(pc::max_abs_diff(pc::diagonal_restriction(ps::symmetrize_average(pc::build_LP(p))), p), pc::kTauEval);
    }
  }
}

// ------------------------------------------------------------ shuffle operators

TEST(ShuffleStep, Examples) {
  const CoeffTensor t = ps::shuffle_step(pc::build_LP(pc::HomPolynomial::product(2, 2)), 1);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.coeff(MultiIndex({1, 2}, 2)), Complex(0.5));
  EXPECT_EQ(t.coeff(MultiIndex({2, 1}, 2)), Complex(0.5));

  std::mt19937_64 rng(51);
  const CoeffTensor sym = ps::symmetrize_average(pc::random_tensor(3, 3, rng));
  for (int k = 1; k <= 2; ++k) EXPECT_LE(pc::max_abs_diff(ps::shuffle_step(sym, k), sym), pc::kTauExact);

  EXPECT_THROW((void)ps::shuffle_step(sym, 0), std::out_of_range);
  EXPECT_THROW((void)ps::shuffle_step(sym, 3), std::out_of_range);
}

TEST(ShuffleStep, MatchesBasisEvaluationOracle) {
  std::mt19937_64 rng(52);
  for (int m = 2; m <= 4; ++m) {
    const CoeffTensor l = pc::random_tensor(m, 3, rng);
    for (int k = 1; k < m; ++k) EXPECT_LE(pc::max_abs_diff(ps::shuffle_step(l, k), step_oracle(l, k)), pc::kTauExact);
  }
}

TEST(Shuffle, Examples) {
  std::mt19937_64 rng(53);
  const pc::HomPolynomial p = pc::random_polynomial(3, 3, rng);
  const CoeffTensor lp = pc::build_LP(p);
  EXPECT_LE(pc::max_abs_diff(ps::shuffle(lp, 0), lp), 0.0);
  EXPECT_LE(pc::max_abs_diff(ps::shuffle(lp, 2), ps::polarization_form(p)), pc::kTauEval);

  // S_1 on x1 x2 x3: one third on each pushed-back arrangement.
  const CoeffTensor s1 = ps::shuffle(pc::build_LP(pc::HomPolynomial::product(3, 3)), 1);
  ASSERT_EQ(s1.size(), 3u);
  for (const auto& idx : {std::vector<int>{1, 2, 3}, std::vector<int>{2, 1, 3}, std::vector<int>{3, 1, 2}}) {
    EXPECT_NEAR(std::abs(s1.coeff(MultiIndex(idx, 3)) - 1.0 / 3.0), 0.0, 1e-15);
  }
  EXPECT_THROW((void)ps::shuffle(lp, 3), std::out_of_range);
}

TEST(Shuffle, CompositionLaw) {
  std::mt19937_64 rng(54);
  for (int m = 2; m <= 6; ++m) {
    const int n = m <= 4 ? 3 : 2;
    const CoeffTensor l = pc::random_tensor(m, n, rng);
    CoeffTensor chained = l;
    for (int k = 1; k < m; ++k) {
      chained = step_oracle(chained, k);
      const CoeffTensor direct = ps::shuffle(l, k);
      ASSERT_LE(pc::max_abs_diff(direct, ps::shuffle_step(ps::shuffle(l, k - 1), k)), pc::kTauExact);
      ASSERT_LE(pc::max_abs_diff(direct, ps::shuffle_by_steps(l, k)), pc::kTauExact);
      ASSERT_LE(pc::max_abs_diff(direct, chained), pc::kTauExact) << "m=" << m << " k=" << k;
    }
  }
}

// ------------------------------------------------------------ masks

TEST(Mask, DAndTEntries) {
  const ps::Mask d = ps::mask_D(3, 4, 1, 3);
  EXPECT_EQ(d(MultiIndex({2, 1, 2}, 4)), Complex(1.0));
  EXPECT_EQ(d(MultiIndex({2, 1, 3}, 4)), Complex(0.0));
  pc::for_each_multi_index(3, 3, [](const MultiIndex& i) { EXPECT_EQ(ps::mask_T(3, 3, 2, 2)(i), Complex(1.0)); });
  const int n = 5;
  pc::for_each_multi_index(2, n, [](const MultiIndex& i) {
    EXPECT_EQ(ps::mask_T(2, n, 1, 2)(i), Complex(i[0] <= i[1] ? 1.0 : 0.0));
  });
  EXPECT_THROW((void)ps::mask_D(3, 3, 0, 1), std::out_of_range);
  EXPECT_THROW((void)ps::mask_T(3, 3, 1, 4), std::out_of_range);
}

TEST(Mask, REntries) {
  EXPECT_EQ(ps::mask_R(3, 4, 1)(MultiIndex({2, 1, 3}, 4)), Complex(0.0));
  EXPECT_EQ(ps::mask_R(4, 5, 2)(MultiIndex({5, 1, 2, 4}, 5)), Complex(3.0));
  EXPECT_EQ(ps::mask_R(3, 2, 1)(MultiIndex({1, 1, 2}, 2)), Complex(1.5));
  EXPECT_THROW((void)ps::mask_R(3, 2, 3), std::out_of_range);
}

TEST(Mask, RFactorization) {
  for (int m = 2; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 1; k < m; ++k) {
        const ps::Mask direct = ps::mask_R(m, n, k);
        const ps::Mask factored = ps::mask_R_factored(m, n, k);
        pc::for_each_multi_index(m, n, [&](const MultiIndex& i) {
          ASSERT_LE(std::abs(direct(i) - factored(i)), pc::kTauExact) << i.to_string();
        });
      }
    }
  }
}

TEST(Mask, IndicatorMasksAreIdempotent) {
  const ps::Mask d = ps::mask_D(3, 3, 1, 2);
  const ps::Mask t = ps::mask_T(3, 3, 2, 3);
  EXPECT_LE(pc::max_abs_diff(ps::materialize(d * d), ps::materialize(d)), 0.0);
  EXPECT_LE(pc::max_abs_diff(ps::materialize(t * t), ps::materialize(t)), 0.0);
}

TEST(Schur, OnesAndZero) {
  std::mt19937_64 rng(61);
  const CoeffTensor l = pc::random_tensor(3, 3, rng);
  EXPECT_LE(pc::max_abs_diff(ps::schur(ps::Mask::ones(3, 3), l), l), 0.0);
  EXPECT_TRUE(ps::schur(ps::Mask::constant(3, 3, 0.0), l).empty());
  EXPECT_THROW((void)ps::schur(ps::Mask::ones(3, 4), l), std::invalid_argument);
  EXPECT_LE(pc::max_abs_diff(ps::schur(ps::materialize(ps::mask_T(3, 3, 1, 2)), l),
                             ps::schur(ps::mask_T(3, 3, 1, 2), l)),
            0.0);
}

TEST(Schur, RecursionMaskUndoesOneShuffleStep) {
  std::mt19937_64 rng(62);
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const CoeffTensor lp = pc::build_LP(pc::random_polynomial(m, n, rng));
      for (int k = 1; k < m; ++k) {
        const CoeffTensor lhs = ps::schur(ps::mask_R(m, n, k), ps::shuffle(lp, k));
        ASSERT_LE(pc::max_abs_diff(lhs, ps::shuffle(lp, k - 1)), pc::kTauExact) << m << "," << n << "," << k;
      }
    }
  }
}

// ------------------------------------------------------------ recursion check

TEST(RecursionCheck, Examples) {
  const ps::RecursionReport prod = ps::recursion_check(pc::HomPolynomial::product(2, 2));
  EXPECT_TRUE(prod.passed);
  EXPECT_GT(prod.checks, 0u);

  const pc::HomPolynomial sq = monomial(2, 2, {1, 1});
  EXPECT_EQ(ps::mask_R(2, 2, 1)(MultiIndex({1, 1}, 2)), Complex(1.0));
  EXPECT_LE(pc::max_abs_diff(ps::shuffle(pc::build_LP(sq), 1), pc::build_LP(sq)), pc::kTauExact);
  EXPECT_TRUE(ps::recursion_check(sq).passed);

  std::mt19937_64 rng(71);
  EXPECT_TRUE(ps::recursion_check(pc::random_polynomial(4, 3, rng)).passed);
}

TEST(RecursionCheck, BudgetGuard) {
  EXPECT_THROW((void)ps::recursion_check(pc::HomPolynomial(7, 2)), pc::BudgetError);
  EXPECT_THROW((void)ps::recursion_check(pc::HomPolynomial(3, 6)), pc::BudgetError);
}

TEST(RecursionCheck, DetectsSignFlippedWeight) {
  std::mt19937_64 rng(72);
  const pc::HomPolynomial p = pc::random_polynomial(3, 3, rng);
  const ps::WeightFactory flipped = [](int m, int n, int k) { return Complex(-1.0) * ps::mask_R(m, n, k); };
  const ps::RecursionReport rep = ps::recursion_check(p, flipped);
  EXPECT_FALSE(rep.passed);
  ASSERT_TRUE(rep.counterexample.has_value());
  EXPECT_EQ(rep.counterexample->kind, ps::RecursionCounterexample::Kind::recursion);
  EXPECT_GT(std::abs(rep.counterexample->expected - rep.counterexample->actual), 0.0);
}
