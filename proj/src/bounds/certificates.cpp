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

#include "polarlab/bounds/certificates.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "polarlab/core/errors.hpp"
#include "polarlab/norms/mu_estimate.hpp"
#include "polarlab/shuffle/symmetrize.hpp"

namespace polarlab::bounds {

UpperCertificate upper_bound_certificate(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("upper_bound_certificate: need m >= 1 and n >= 1");
  UpperCertificate cert;
  cert.m = m;
  cert.n = n;
  cert.mu_bar = norms::mu_upper_bound_T(n);
  const double md = static_cast<double>(m);
  cert.log_value = (md - 1.0) * std::numbers::ln2 + md + std::lgamma(md + 1.0) + (md - 1.0) * std::log(cert.mu_bar);
  cert.value = std::exp(cert.log_value);
  cert.smoothed_shape = std::pow(md, md) * std::pow(std::log(static_cast<double>(n)), md - 1.0);
  return cert;
}

BoundReport chain_check(const HomPolynomial& p, BallSpec ball, const ChainOptions& opts) {
  const int m = p.degree();
  const int n = p.dim();
  if (m > 5 || n > 6) {
    throw core::BudgetError("chain_check: (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") exceeds the estimation budget m <= 5, n <= 6");
  }
  norms::AscentOptions ascent;
  ascent.restarts = opts.restarts;
  ascent.iters = opts.iters;
  ascent.seed = opts.seed;
  ascent.threads = opts.threads;

  BoundReport report;
  report.m = m;
  report.n = n;
  report.p = ball.p;

  const core::CoeffTensor lp = core::build_LP(p);
  std::vector<EstimateReport> sups;
  for (int k = 0; k < m; ++k) sups.push_back(norms::sup_mform_ball(shuffle::shuffle(lp, k), ball, ascent));

  const double mu_bar = norms::mu_upper_bound_T(n);
  const double grow = 1.0 + opts.slack;
  bool ok = true;
  for (int k = 1; k < m; ++k) {
    ChainStep step;
    step.k = k;
    step.sup_prev = sups[static_cast<std::size_t>(k - 1)].value;
    step.sup_next = sups[static_cast<std::size_t>(k)].value;
    step.factor = 2.0 * static_cast<double>(m - k + 1) * mu_bar;
    step.holds = step.sup_prev <= step.factor * step.sup_next * grow;
    ok = ok && step.holds;
    report.chain.push_back(step);
  }

  const EstimateReport sup_p = norms::sup_poly_ball(p, ball, ascent);
  report.sup_poly = sup_p.value;
  report.sup_sym = sups.back().value;
  const bool endpoint = report.sup_sym <= std::exp(static_cast<double>(m)) * report.sup_poly * grow;
  report.endpoint_holds = endpoint;
  ok = ok && endpoint;

  const UpperCertificate cert = upper_bound_certificate(m, n);
  report.upper = cert.value;
  report.lower = sups.front();
  report.lower.direction = core::Direction::statistical;
  report.lower.value = report.sup_poly > 0.0 ? sups.front().value / report.sup_poly : 0.0;
  report.lower.method = "ratio of ascent lower bounds sup|L_P| / sup|P|";
  // Sanity gate: the observed ratio cannot exceed the closed-form constant.
  ok = ok && report.lower.value <= report.upper * grow;
  report.passed = ok;
  return report;
}

EstimateReport product_poly_ratio(int m, core::PExponent p, const norms::AscentOptions& opts) {
  if (m < 1) throw std::invalid_argument("product_poly_ratio: m must be >= 1");
  const HomPolynomial poly = HomPolynomial::product(m, m);
  const BallSpec ball{p};
  const double md = static_cast<double>(m);
  const double closed_den = p.is_infinite() ? 1.0 : std::pow(md, -md / p.value());

  const EstimateReport num = norms::sup_mform_ball(core::build_LP(poly), ball, opts);
  const EstimateReport den = norms::sup_poly_ball(poly, ball, opts);
  if (std::abs(num.value - 1.0) > 1e-6 || std::abs(den.value - closed_den) > 1e-6) {
    std::ostringstream os;
    os.precision(17);
    os << "product_poly_ratio: estimators disagree with closed forms (sup|L_P| = " << num.value
       << ", sup|P| = " << den.value << ", expected " << closed_den << ")";
    throw std::runtime_error(os.str());
  }

  EstimateReport report;
  report.direction = core::Direction::certified_lower_bound;
  report.value = num.value / closed_den;
  report.witness = num.witness;
  report.samples = num.samples + den.samples;
  report.seed = opts.seed;
  std::ostringstream os;
  os.precision(17);
  os << "sup|L_P| at canonical vectors over Lagrange value m^{-m/p}; ascent sup|P| = " << den.value;
  report.method = os.str();
  return report;
}

}  // namespace polarlab::bounds
