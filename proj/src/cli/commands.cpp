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

#include "polarlab/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "polarlab/bounds/bourgain.hpp"
#include "polarlab/bounds/certificates.hpp"
#include "polarlab/cli/poly_io.hpp"
#include "polarlab/core/errors.hpp"
#include "polarlab/core/polynomial.hpp"
#include "polarlab/norms/sup_estimate.hpp"
#include "polarlab/shuffle/mask.hpp"
#include "polarlab/shuffle/permutation.hpp"
#include "polarlab/shuffle/symmetrize.hpp"

namespace polarlab::cli {

using nlohmann::ordered_json;
using core::CoeffTensor;
using core::Complex;
using core::HomPolynomial;
using core::MultiIndex;

namespace {

constexpr double kSymTol = 1e-10;

ordered_json result(std::string kind, std::string reference) {
  ordered_json r;
  r["kind"] = std::move(kind);
  r["reference"] = std::move(reference);
  r["passed"] = nullptr;
  r["summary"] = ordered_json::object();
  return r;
}

std::vector<int> entries(const MultiIndex& i) { return {i.entries().begin(), i.entries().end()}; }

struct Worst {
  MultiIndex index;
  Complex lhs{};
  Complex rhs{};
  double diff = -1.0;
};

Worst worst_entry(const CoeffTensor& a, const CoeffTensor& b) {
  Worst w;
  auto visit = [&](const MultiIndex& i) {
    const double d = std::abs(a.coeff(i) - b.coeff(i));
    if (d > w.diff) w = {i, a.coeff(i), b.coeff(i), d};
  };
  for (const auto& [i, c] : a.coeffs()) visit(i);
  for (const auto& [i, c] : b.coeffs()) visit(i);
  return w;
}

ordered_json counterexample(int k, const MultiIndex& i, Complex expected, Complex actual) {
  ordered_json j;
  j["k"] = k;
  j["index"] = entries(i);
  j["expected"] = complex_to_json(expected);
  j["actual"] = complex_to_json(actual);
  return j;
}

HomPolynomial subject(const ResolvedConfig& c, int m, std::uint64_t tag) {
  if (c.poly) return read_polynomial(*c.poly, c.n);
  auto rng = norms::unit_rng(c.seed, {tag, static_cast<std::uint64_t>(m)});
  return core::random_polynomial(m, c.n, rng);
}

ordered_json witness_json(const std::vector<core::ComplexVector>& w) {
  auto out = ordered_json::array();
  for (const auto& v : w) {
    auto vec = ordered_json::array();
    for (const auto& z : v) vec.push_back(complex_to_json(z));
    out.push_back(std::move(vec));
  }
  return out;
}

ordered_json estimate_json(const core::EstimateReport& r) {
  ordered_json j;
  j["value"] = r.value;
  j["direction"] = core::to_string(r.direction);
  j["ci_halfwidth"] = r.ci_halfwidth;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["method"] = r.method;
  return j;
}

// ---------------------------------------------------------------- verify

ordered_json verify_symmetrization(const HomPolynomial& p, const CoeffTensor& lp) {
  const int m = p.degree();
  auto r = result("shuffle-symmetrization", "S_{m-1} L_P = (1/m!) sum_sigma L_P o sigma = B");
  const CoeffTensor by_shuffle = shuffle::shuffle(lp, m - 1);
  const CoeffTensor by_average = shuffle::symmetrize_average(lp);
  const CoeffTensor by_polar = shuffle::polarization_form(p);
  const Worst w1 = worst_entry(by_shuffle, by_average);
  const Worst w2 = worst_entry(by_shuffle, by_polar);
  const bool ok = w1.diff <= kSymTol && w2.diff <= kSymTol;
  r["passed"] = ok;
  r["summary"] = {{"m", m}, {"n", p.dim()}, {"max_diff_average", w1.diff}, {"max_diff_polarization", w2.diff},
                  {"tolerance", kSymTol}};
  if (!ok) {
    const Worst& w = w1.diff > kSymTol ? w1 : w2;
    r["details"] = {{"counterexample", counterexample(m - 1, w.index, w.rhs, w.lhs)}};
  }
  return r;
}

ordered_json verify_composition(int m, int n, std::uint64_t seed) {
  auto r = result("composition-law", "S_k = T_k o ... o T_1");
  auto rng = norms::unit_rng(seed, {0xc0, static_cast<std::uint64_t>(m)});
  const CoeffTensor t = core::random_tensor(m, n, rng);
  double worst = 0.0;
  ordered_json bad = nullptr;
  for (int k = 1; k < m; ++k) {
    const Worst w = worst_entry(shuffle::shuffle(t, k), shuffle::shuffle_by_steps(t, k));
    worst = std::max(worst, w.diff);
    if (w.diff > core::kTauExact && bad.is_null()) bad = counterexample(k, w.index, w.rhs, w.lhs);
  }
  r["passed"] = bad.is_null();
  r["summary"] = {{"m", m}, {"n", n}, {"max_diff", worst}, {"tolerance", core::kTauExact}};
  if (!bad.is_null()) r["details"] = {{"counterexample", bad}};
  return r;
}

ordered_json verify_recursion(const HomPolynomial& p, const shuffle::WeightFactory& weight) {
  auto r = result("coefficient-recursion", "c_i(S_{k-1} L_P) = R_k(i) c_i(S_k L_P); support on i_{k+1} <= ... <= i_m");
  const shuffle::RecursionReport rep = shuffle::recursion_check(p, weight);
  r["passed"] = rep.passed;
  r["summary"] = {{"m", p.degree()}, {"n", p.dim()}, {"checks", rep.checks}, {"tolerance", core::kTauExact}};
  if (rep.counterexample) {
    const auto& ce = *rep.counterexample;
    auto j = counterexample(ce.k, ce.index, ce.expected, ce.actual);
    j["kind"] = shuffle::to_string(ce.kind);
    r["details"] = {{"counterexample", j}};
  }
  return r;
}

ordered_json verify_mask_factorization(int m, int n) {
  auto r = result("mask-factorization",
                  "R_k = (m-k+1) T^{k,k+1} * (1 + sum_u (1/(u+1) - 1/u) D^{k,k+u})");
  double worst = 0.0;
  ordered_json bad = nullptr;
  for (int k = 1; k < m; ++k) {
    const Worst w = worst_entry(shuffle::materialize(shuffle::mask_R(m, n, k)),
                                shuffle::materialize(shuffle::mask_R_factored(m, n, k)));
    worst = std::max(worst, w.diff);
    if (w.diff > core::kTauExact && bad.is_null()) bad = counterexample(k, w.index, w.lhs, w.rhs);
  }
  r["passed"] = bad.is_null();
  r["summary"] = {{"m", m}, {"n", n}, {"max_diff", worst}, {"tolerance", core::kTauExact}};
  if (!bad.is_null()) r["details"] = {{"counterexample", bad}};
  return r;
}

ordered_json verify_equidistribution(int m) {
  auto r = result("equidistribution", "P_{m-1}(sigma) = 1/m! for every sigma");
  const shuffle::PermDistribution d = shuffle::fy_distribution(m, m - 1);
  const std::size_t expected_support = shuffle::all_permutations(m).size();
  const double uniform = 1.0 / static_cast<double>(expected_support);
  double worst = 0.0;
  ordered_json bad = nullptr;
  for (const auto& sigma : shuffle::all_permutations(m)) {
    const double diff = std::abs(d.prob(sigma) - uniform);
    worst = std::max(worst, diff);
    if (diff > core::kTauExact && bad.is_null()) {
      bad = {{"permutation", sigma.one_based()}, {"probability", d.prob(sigma)}, {"expected", uniform}};
    }
  }
  const bool ok = bad.is_null() && d.probs.size() == expected_support;
  r["passed"] = ok;
  r["summary"] = {{"m", m}, {"support_size", d.probs.size()}, {"max_diff", worst}, {"tolerance", core::kTauExact}};
  if (!bad.is_null()) r["details"] = {{"counterexample", bad}};
  return r;
}

ordered_json verify_diagonal(const HomPolynomial& p, const CoeffTensor& lp) {
  auto r = result("diagonal-identity", "S_k L_P(x, ..., x) = P(x) for every k");
  double worst = 0.0;
  int bad_k = -1;
  for (int k = 0; k < p.degree(); ++k) {
    const double d = core::max_abs_diff(core::diagonal_restriction(shuffle::shuffle(lp, k)), p);
    worst = std::max(worst, d);
    if (d > kSymTol && bad_k < 0) bad_k = k;
  }
  r["passed"] = bad_k < 0;
  r["summary"] = {{"m", p.degree()}, {"n", p.dim()}, {"max_diff", worst}, {"tolerance", kSymTol}};
  if (bad_k >= 0) r["details"] = {{"counterexample", {{"k", bad_k}}}};
  return r;
}

// ---------------------------------------------------------------- bounds

ordered_json bound_row(const ResolvedConfig& c, int m, core::PExponent p) {
  auto r = result("bound", "lower statistic <= C_p(m,n) <= 2^{m-1} e^m m! log2(2n)^{m-1}");
  const bounds::UpperCertificate cert = bounds::upper_bound_certificate(m, c.n);

  norms::AscentOptions ascent;
  ascent.restarts = c.restarts;
  ascent.seed = c.seed;
  ascent.threads = c.threads;
  const core::EstimateReport product = bounds::product_poly_ratio(m, p, ascent);

  double lower = product.value;
  std::string lower_source = "product-polynomial m^{m/p}";
  std::string lower_direction(core::to_string(product.direction));
  double lower_ci = 0.0;

  ordered_json summary;
  summary["m"] = m;
  summary["n"] = c.n;
  summary["p"] = p.to_string();
  summary["product_ratio"] = product.value;

  const int block = (2 * c.n) / std::max(m, 1);
  if (p.is_infinite() && m % 2 == 0 && block >= 2 && c.samples / (m / 2) >= 2) {
    bounds::BourgainOptions bo;
    bo.samples = c.samples;
    bo.seed = c.seed;
    bo.threads = c.threads;
    const bounds::BourgainLowerBound b = bounds::bourgain_lower_bound(m, c.n, bo);
    summary["block_statistic"] = b.statistic.value;
    summary["block_ci"] = b.statistic.ci_halfwidth;
    summary["block_size"] = b.block_size;
    summary["block_hypothesis_log_b_ge_pi"] = b.hypothesis_holds;
    summary["block_closed_form"] = b.closed_form ? ordered_json(*b.closed_form) : ordered_json(nullptr);
    if (b.statistic.value > lower) {
      lower = b.statistic.value;
      lower_source = "block chaos ratio prod I2 / prod I1";
      lower_direction = core::to_string(b.statistic.direction);
      lower_ci = b.statistic.ci_halfwidth;
    }
  } else {
    summary["block_statistic"] = nullptr;
  }

  bool ok = lower <= cert.value;
  if (m <= 5 && c.n <= 6 && c.n >= 1) {
    const HomPolynomial poly = subject(c, m, 0xb0);
    bounds::ChainOptions co;
    co.restarts = c.restarts;
    co.seed = c.seed;
    co.threads = c.threads;
    const bounds::BoundReport chain = bounds::chain_check(poly, {p}, co);
    summary["chain_passed"] = chain.passed;
    summary["chain_sup_poly"] = chain.sup_poly;
    summary["chain_sup_sym"] = chain.sup_sym;
    summary["chain_lift_ratio"] = chain.lower.value;
    auto steps = ordered_json::array();
    for (const auto& s : chain.chain) {
      steps.push_back({{"k", s.k}, {"sup_prev", s.sup_prev}, {"sup_next", s.sup_next}, {"factor", s.factor},
                       {"holds", s.holds}});
    }
    r["rows"] = steps;
    r["details"] = {{"chain_polynomial", polynomial_to_json(poly)},
                    {"endpoint_holds", chain.endpoint_holds.value_or(false)}};
    ok = ok && chain.passed;
  } else {
    summary["chain_passed"] = nullptr;
  }

  summary["lower"] = lower;
  summary["lower_source"] = lower_source;
  summary["lower_direction"] = lower_direction;
  summary["lower_ci"] = lower_ci;
  summary["upper"] = cert.value;
  summary["upper_log"] = cert.log_value;
  summary["mu_bar"] = cert.mu_bar;
  summary["growth_shape_m^m_logn^(m-1)"] = cert.smoothed_shape;
  summary["lower_le_upper"] = lower <= cert.value;
  r["passed"] = ok;
  r["summary"] = summary;
  return r;
}

}  // namespace

ordered_json run_verify(const ResolvedConfig& c, const RunHooks& hooks) {
  const int m = c.m.front();
  const HomPolynomial p = subject(c, m, 0xc11);
  const CoeffTensor lp = core::build_LP(p);
  auto out = ordered_json::array();
  out.push_back(verify_symmetrization(p, lp));
  out.push_back(verify_composition(m, p.dim(), c.seed));
  out.push_back(verify_recursion(p, hooks.recursion_weight));
  out.push_back(verify_mask_factorization(m, p.dim()));
  out.push_back(verify_equidistribution(m));
  out.push_back(verify_diagonal(p, lp));
  out.front()["details"]["polynomial"] = polynomial_to_json(p);
  return out;
}

ordered_json run_bounds(const ResolvedConfig& c) {
  auto out = ordered_json::array();
  for (int m : c.m) {
    for (const auto& p : c.p) out.push_back(bound_row(c, m, p));
  }
  return out;
}

ordered_json run_shuffle_table(const ResolvedConfig& c) {
  const int m = c.m.front();
  auto out = ordered_json::array();
  for (int k = 0; k < m; ++k) {
    auto r = result("fy-distribution", "P_k: law of the permutation after k Fisher-Yates steps");
    auto rows = ordered_json::array();
    double total = 0.0;
    std::size_t support = 0;
    if (k == 0) {
      rows.push_back({{"permutation", shuffle::Permutation::identity(m).one_based()}, {"probability", 1.0}});
      total = 1.0;
      support = 1;
    } else {
      const shuffle::PermDistribution d = shuffle::fy_distribution(m, k);
      for (const auto& [sigma, prob] : d.probs) {
        rows.push_back({{"permutation", sigma.one_based()}, {"probability", prob}});
      }
      total = d.total();
      support = d.probs.size();
    }
    r["summary"] = {{"m", m}, {"k", k}, {"support_size", support}, {"total", total}};
    r["rows"] = rows;
    out.push_back(std::move(r));
  }
  if (c.poly) {
    const HomPolynomial p = read_polynomial(*c.poly, c.n);
    const CoeffTensor lp = core::build_LP(p);
    for (int k = 0; k < m; ++k) {
      auto r = result("shuffled-lift", "c_i(S_k L_P) = sum_sigma P_k(sigma) c_{i o sigma}(L_P)");
      CoeffTensor s = shuffle::shuffle(lp, k);
      s.prune(0.0);
      r["summary"] = {{"m", m}, {"n", p.dim()}, {"k", k}, {"nonzeros", s.size()}};
      r["rows"] = tensor_to_json(s);
      out.push_back(std::move(r));
    }
  }
  return out;
}

ordered_json run_estimate_norm(const ResolvedConfig& c) {
  const int m = c.m.front();
  const HomPolynomial poly = subject(c, m, 0xe0);
  norms::AscentOptions ascent;
  ascent.restarts = c.restarts;
  ascent.seed = c.seed;
  ascent.threads = c.threads;

  auto out = ordered_json::array();
  for (const auto& p : c.p) {
    const norms::BallSpec ball{p};
    const core::EstimateReport sp = norms::sup_poly_ball(poly, ball, ascent);
    const core::EstimateReport sl = norms::sup_mform_ball(core::build_LP(poly), ball, ascent);

    auto add = [&](std::string kind, std::string reference, const core::EstimateReport& e) {
      auto r = result(std::move(kind), std::move(reference));
      ordered_json s = estimate_json(e);
      s["m"] = m;
      s["n"] = poly.dim();
      s["p"] = p.to_string();
      s["restarts"] = c.restarts;
      r["summary"] = s;
      r["details"] = {{"witness", witness_json(e.witness)}};
      out.push_back(std::move(r));
    };
    add("sup-polynomial", "sup_{||x||_p <= 1} |P(x)|", sp);
    add("sup-lift", "sup_{||x^(k)||_p <= 1} |L_P(x^(1), ..., x^(m))|", sl);

    auto r = result("sup-polarization", "sup_{||x^(k)||_p <= 1} |B(x^(1), ..., x^(m))|");
    try {
      const core::EstimateReport sb = norms::sup_mform_ball(shuffle::polarization_form(poly), ball, ascent);
      ordered_json s = estimate_json(sb);
      s["m"] = m;
      s["n"] = poly.dim();
      s["p"] = p.to_string();
      s["restarts"] = c.restarts;
      s["lift_over_poly"] = sp.value > 0.0 ? sl.value / sp.value : 0.0;
      s["polarization_over_poly"] = sp.value > 0.0 ? sb.value / sp.value : 0.0;
      r["summary"] = s;
      r["details"] = {{"witness", witness_json(sb.witness)}};
    } catch (const core::BudgetError& e) {
      r["summary"] = {{"m", m}, {"n", poly.dim()}, {"p", p.to_string()}, {"skipped", e.what()}};
    }
    out.push_back(std::move(r));
  }
  out.front()["details"]["polynomial"] = polynomial_to_json(poly);
  return out;
}

ordered_json run_bourgain(const ResolvedConfig& c) {
  bounds::BourgainOptions bo;
  bo.samples = c.samples;
  bo.seed = c.seed;
  bo.threads = c.threads;
  auto out = ordered_json::array();
  for (int m : c.m) {
    if (m == 2) {
      const bounds::BourgainIntegrals in = bounds::bourgain_integrals(c.n, bo);
      auto r = result("bourgain-integrals",
                      "E||sum_{i<j} v_ij x_i x_j|| <= pi and E||sum_{i<j} v_ij x_i y_j|| >= log n - pi");
      r["passed"] = in.one_variable_below_pi && in.two_variable_above_target;
      r["summary"] = {{"n", c.n},
                      {"samples", in.one_variable.samples},
                      {"I1", in.one_variable.value},
                      {"I1_ci", in.one_variable.ci_halfwidth},
                      {"I2", in.two_variable.value},
                      {"I2_ci", in.two_variable.ci_halfwidth},
                      {"pi", std::numbers::pi},
                      {"log_n_minus_pi", in.lower_target},
                      {"I1_minus_ci_le_pi", in.one_variable_below_pi},
                      {"I2_plus_ci_ge_log_n_minus_pi", in.two_variable_above_target},
                      {"ratio", in.ratio()}};
      out.push_back(std::move(r));
    }
    const bounds::BourgainLowerBound lb = bounds::bourgain_lower_bound(m, c.n, bo);
    auto r = result("bourgain-lower-bound", "prod_k I2_k / prod_k I1_k >= ((log b - pi)/pi)^{m/2}, b = floor(2n/m)");
    if (lb.meets_closed_form) r["passed"] = *lb.meets_closed_form;
    r["summary"] = {{"m", m},
                    {"n", c.n},
                    {"block_size", lb.block_size},
                    {"statistic", lb.statistic.value},
                    {"ci_halfwidth", lb.statistic.ci_halfwidth},
                    {"samples_per_factor", lb.factors.front().one_variable.samples},
                    {"hypothesis_log_b_ge_pi", lb.hypothesis_holds},
                    {"closed_form", lb.closed_form ? ordered_json(*lb.closed_form) : ordered_json(nullptr)}};
    auto rows = ordered_json::array();
    for (std::size_t k = 0; k < lb.factors.size(); ++k) {
      const auto& f = lb.factors[k];
      rows.push_back({{"block", k + 1},
                      {"lo", static_cast<int>(k) * lb.block_size},
                      {"hi", static_cast<int>(k + 1) * lb.block_size},
                      {"I1", f.one_variable.value},
                      {"I1_ci", f.one_variable.ci_halfwidth},
                      {"I2", f.two_variable.value},
                      {"I2_ci", f.two_variable.ci_halfwidth}});
    }
    r["rows"] = rows;
    out.push_back(std::move(r));
  }
  return out;
}

CommandOutput run(const ResolvedConfig& c, const RunHooks& hooks) {
  const auto start = std::chrono::steady_clock::now();
  ordered_json results;
  switch (c.subcommand) {
    case Subcommand::verify: results = run_verify(c, hooks); break;
    case Subcommand::bounds: results = run_bounds(c); break;
    case Subcommand::shuffle_table: results = run_shuffle_table(c); break;
    case Subcommand::estimate_norm: results = run_estimate_norm(c); break;
    case Subcommand::bourgain: results = run_bourgain(c); break;
  }
  CommandOutput out;
  out.document["schema_version"] = kSchemaVersion;
  out.document["config_echo"] = echo(c);
  out.document["results"] = results;
  ordered_json timing;
  timing["recorded"] = c.timing;
  if (c.timing) {
    timing["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  out.document["timing"] = timing;
  for (const auto& r : results) {
    if (r["passed"].is_boolean() && !r["passed"].get<bool>()) out.exit_code = 1;
  }
  return out;
}

}  // namespace polarlab::cli
