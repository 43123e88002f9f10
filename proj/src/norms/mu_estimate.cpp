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

#include "polarlab/norms/mu_estimate.hpp"

#include <cmath>
#include <stdexcept>

#include "polarlab/core/errors.hpp"

namespace polarlab::norms {

using core::Complex;
using core::MultiIndex;

namespace {

constexpr std::size_t kDenseBudget = 65536;

struct RatioEval {
  double num = 0.0;
  double den = 0.0;
  std::vector<ComplexVector> num_witness;
  std::vector<ComplexVector> den_witness;
  [[nodiscard]] double ratio() const { return den > 0.0 ? num / den : 0.0; }
};

RatioEval evaluate_ratio(const shuffle::Mask& a, const CoeffTensor& l, BallSpec ball, AscentOptions opts) {
  const CoeffTensor masked = shuffle::schur(a, l);
  auto num = sup_mform_ball(masked, ball, opts);
  auto den = sup_mform_ball(l, ball, opts);
  return {num.value, den.value, std::move(num.witness), std::move(den.witness)};
}

CoeffTensor profile(int m, int n, int slot, double shift) {
  CoeffTensor l(m, n);
  core::for_each_multi_index(m, n, [&](const MultiIndex& i) {
    const double d = static_cast<double>(i[slot - 1] - i[slot]) + shift;
    if (d != 0.0) l.set(i, 1.0 / d);
  });
  return l;
}

CoeffTensor gaussian(int m, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CoeffTensor l(m, n);
  core::for_each_multi_index(m, n, [&](const MultiIndex& i) { l.set(i, Complex(g(rng), g(rng))); });
  return l;
}

double frobenius(const CoeffTensor& l) {
  double s = 0.0;
  for (const auto& [i, c] : l.coeffs()) s += std::norm(c);
  return std::sqrt(s);
}

// Direction in coefficient space that increases |sum_i w_i c_i| at the
// witness, where w_i = weight(i) * prod_t x^(t)_{i_t}.
void add_supergradient(CoeffTensor& g, const CoeffTensor& l, const shuffle::Mask* a,
                       const std::vector<ComplexVector>& xs, double scale) {
  Complex value{};
  std::vector<std::pair<MultiIndex, Complex>> w;
  w.reserve(l.size());
  core::for_each_multi_index(l.arity(), l.dim(), [&](const MultiIndex& i) {
    Complex wi = a ? a->entry(i) : Complex{1.0};
    for (int s = 0; s < l.arity(); ++s) wi *= xs[static_cast<std::size_t>(s)][static_cast<std::size_t>(i[s] - 1)];
    value += wi * l.coeff(i);
    w.emplace_back(i, wi);
  });
  if (std::abs(value) == 0.0) return;
  const Complex phase = value / std::abs(value);
  for (const auto& [i, wi] : w) g.add(i, scale * std::conj(wi) * phase);
}

}  // namespace

core::EstimateReport mu_lower_bound(const shuffle::Mask& a, BallSpec ball, const MuOptions& opts) {
  const int m = a.arity();
  const int n = a.dim();
  if (core::index_set_size(m, n, kDenseBudget) == 0) {
    throw core::BudgetError("mu_lower_bound: n^m exceeds the dense candidate budget 65536");
  }
  AscentOptions inner;
  inner.restarts = opts.restarts;
  inner.iters = opts.iters;
  inner.seed = opts.seed;
  inner.threads = opts.threads;

  std::vector<CoeffTensor> candidates;
  for (int s = 1; s < m; ++s) {
    candidates.push_back(profile(m, n, s, 0.0));
    candidates.push_back(profile(m, n, s, 0.5));
  }
  for (int t = 0; t < opts.trials; ++t) {
    auto rng = unit_rng(opts.seed, {0x601u, static_cast<std::uint64_t>(t)});
    candidates.push_back(gaussian(m, n, rng));
  }

  CoeffTensor best_form(m, n);
  RatioEval best;
  bool have_best = false;
  for (const auto& c : candidates) {
    if (c.empty()) continue;
    RatioEval r = evaluate_ratio(a, c, ball, inner);
    if (!have_best || r.ratio() > best.ratio()) {
      best = std::move(r);
      best_form = c;
      have_best = true;
    }
  }

  core::EstimateReport report;
  report.direction = core::Direction::statistical;
  report.seed = opts.seed;
  report.samples = static_cast<std::int64_t>(candidates.size());
  if (!have_best) {
    report.method = "mu-search: no nonzero candidate";
    return report;
  }

  // Ratio ascent: move L along the supergradient of log sup|A*L| - log sup|L|
  // at the current witnesses. Steps are not forced to improve; the best form
  // seen is kept.
  CoeffTensor cur = best_form;
  RatioEval cur_eval = best;
  for (int step = 0; step < opts.refine_steps; ++step) {
    CoeffTensor g(m, n);
    add_supergradient(g, cur, &a, cur_eval.num_witness, 1.0 / cur_eval.num);
    add_supergradient(g, cur, nullptr, cur_eval.den_witness, -1.0 / cur_eval.den);
    const double gn = frobenius(g);
    if (!(gn > 1e-14 * frobenius(cur) / std::max(cur_eval.den, 1e-300))) break;
    const double eta = 0.01 * frobenius(cur) / gn;
    for (const auto& [i, gi] : g.coeffs()) cur.add(i, eta * gi);

    AscentOptions warm = inner;
    warm.warm_starts = {cur_eval.num_witness, cur_eval.den_witness};
    cur_eval = evaluate_ratio(a, cur, ball, warm);
    ++report.samples;
    if (cur_eval.ratio() > best.ratio()) {
      best = cur_eval;
      best_form = cur;
    }
  }

  // Final pass with more restarts; both sides share every warm start.
  AscentOptions final_opts = inner;
  final_opts.restarts = 4 * inner.restarts;
  final_opts.warm_starts = {best.num_witness, best.den_witness};
  const RatioEval fin = evaluate_ratio(a, best_form, ball, final_opts);
  report.value = fin.ratio();
  report.witness = fin.num_witness;
  report.method = "mu-search: max sup|A*L|/sup|L| over " + std::to_string(candidates.size()) +
                  " candidates and " + std::to_string(opts.refine_steps) +
                  " ratio-ascent steps; both sups are alternating-ascent lower bounds";
  return report;
}

double mu_upper_bound_T(int n) {
  if (n < 1) throw std::invalid_argument("mu_upper_bound_T: n must be >= 1");
  return std::log2(2.0 * static_cast<double>(n));
}

}  // namespace polarlab::norms
