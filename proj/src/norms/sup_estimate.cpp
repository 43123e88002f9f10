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

#include "polarlab/norms/sup_estimate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polarlab::norms {

using core::Complex;

ComplexVector random_sphere_point(int n, BallSpec ball, std::mt19937_64& rng) {
  ComplexVector z(static_cast<std::size_t>(n));
  if (ball.p.is_infinite()) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (auto& v : z) v = std::polar(1.0, angle(rng));
    return z;
  }
  std::normal_distribution<double> gauss;
  for (auto& v : z) v = Complex(gauss(rng), gauss(rng));
  const double nz = core::lp_norm(z, ball.p);
  for (auto& v : z) v /= nz;
  return z;
}

namespace {

// ---------------------------------------------------------------------------
// Polynomial ascent

struct PolyRun {
  double value = 0.0;
  ComplexVector point;
};

void normalize(ComplexVector& z, PExponent p) {
  if (p.is_infinite()) {
    for (auto& v : z) v = v == Complex{} ? Complex{1.0} : v / std::abs(v);
    return;
  }
  const double nz = core::lp_norm(z, p);
  for (auto& v : z) v /= nz;
}

double poly_objective(const HomPolynomial& p, const ComplexVector& z) {
  return std::abs(core::eval_polynomial(p, z));
}

double euclid(const ComplexVector& g) {
  double s = 0.0;
  for (const auto& v : g) s += std::norm(v);
  return std::sqrt(s);
}

PolyRun poly_ascent(const HomPolynomial& p, BallSpec ball, ComplexVector z, int iters) {
  const int m = p.degree();
  normalize(z, ball.p);
  PolyRun run{poly_objective(p, z), z};
  if (run.value == 0.0) return run;

  double eta = 0.25;
  ComplexVector trial(z.size());
  for (int it = 0; it < iters && eta > 1e-15; ++it) {
    const Complex pz = core::eval_polynomial(p, z);
    const core::ComplexVector g = core::polynomial_gradient(p, z);
    // Ascent direction of log|P| - m log||z||_p with z on the unit sphere.
    ComplexVector dir(z.size());
    if (ball.p.is_infinite()) {
      // Tangent to the torus: d/dtheta_j log|P| = -Im(g_j z_j / P).
      for (std::size_t j = 0; j < z.size(); ++j) {
        const double d = -std::imag(g[j] * z[j] / pz);
        dir[j] = Complex(0.0, d) * z[j];
      }
    } else {
      const double pv = ball.p.value();
      for (std::size_t j = 0; j < z.size(); ++j) {
        Complex d = std::conj(g[j] / pz);
        const double a = std::abs(z[j]);
        if (a > 0.0) d -= static_cast<double>(m) * std::pow(a, pv - 2.0) * z[j];
        dir[j] = d;
      }
    }
    const double gn = euclid(dir);
    if (!(gn > 0.0) || !std::isfinite(gn)) break;
    const double zn = euclid(z);

    bool improved = false;
    while (eta > 1e-15) {
      for (std::size_t j = 0; j < z.size(); ++j) trial[j] = z[j] + (eta * zn / gn) * dir[j];
      normalize(trial, ball.p);
      const double v = poly_objective(p, trial);
      if (v > run.value) {
        improved = v - run.value > 1e-16 * run.value;
        z = trial;
        run.value = v;
        eta = std::min(1.0, eta * 1.5);
        break;
      }
      eta *= 0.25;
    }
    if (!improved) break;
  }
  run.point = z;
  return run;
}

// ---------------------------------------------------------------------------
// Alternating ascent on flattened coefficients

struct FlatForm {
  int m = 0;
  int n = 0;
  std::vector<int> keys;  // 0-based entries, m per term
  std::vector<Complex> coeffs;

  explicit FlatForm(const CoeffTensor& l) : m(l.arity()), n(l.dim()) {
    keys.reserve(l.size() * static_cast<std::size_t>(m));
    for (const auto& [i, c] : l.coeffs()) {
      if (c == Complex{}) continue;
      for (int s = 0; s < m; ++s) keys.push_back(i[s] - 1);
      coeffs.push_back(c);
    }
  }

  [[nodiscard]] std::size_t terms() const { return coeffs.size(); }

  [[nodiscard]] Complex eval(const std::vector<ComplexVector>& xs) const {
    Complex total{};
    for (std::size_t t = 0; t < terms(); ++t) {
      Complex term = coeffs[t];
      const int* key = keys.data() + t * static_cast<std::size_t>(m);
      for (int s = 0; s < m; ++s) term *= xs[static_cast<std::size_t>(s)][static_cast<std::size_t>(key[s])];
      total += term;
    }
    return total;
  }

  void functional(const std::vector<ComplexVector>& xs, int slot, ComplexVector& a) const {
    std::fill(a.begin(), a.end(), Complex{});
    for (std::size_t t = 0; t < terms(); ++t) {
      Complex term = coeffs[t];
      const int* key = keys.data() + t * static_cast<std::size_t>(m);
      for (int s = 0; s < m; ++s) {
        if (s != slot) term *= xs[static_cast<std::size_t>(s)][static_cast<std::size_t>(key[s])];
      }
      a[static_cast<std::size_t>(key[slot])] += term;
    }
  }
};

AscentRun run_alternating(const FlatForm& form, BallSpec ball, std::vector<ComplexVector> xs, int max_sweeps,
                          double tol, std::vector<double>* trace) {
  AscentRun run;
  run.value = std::abs(form.eval(xs));
  ComplexVector a(static_cast<std::size_t>(form.n));
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = run.value;
    for (int s = 0; s < form.m; ++s) {
      form.functional(xs, s, a);
      core::DualWitness w = core::dual_maximizer(a, ball.p);
      // Keep the current slot on ties or when the functional vanishes.
      if (!w.y.empty() && w.value > run.value) {
        xs[static_cast<std::size_t>(s)] = std::move(w.y);
        run.value = w.value;
      }
      if (trace) trace->push_back(std::abs(form.eval(xs)));
    }
    run.sweeps = sweep + 1;
    if (run.value - before <= tol * std::max(run.value, 1e-300)) break;
  }
  run.point = std::move(xs);
  run.value = std::abs(form.eval(run.point));
  return run;
}

EstimateReport empty_report(const char* method, std::uint64_t seed) {
  EstimateReport r;
  r.direction = core::Direction::certified_lower_bound;
  r.method = method;
  r.seed = seed;
  return r;
}

}  // namespace

EstimateReport sup_poly_ball(const HomPolynomial& p, BallSpec ball, const AscentOptions& opts) {
  const int n = p.dim();
  EstimateReport report = empty_report(ball.p.is_infinite() ? "torus-phase-ascent" : "sphere-gradient-ascent", opts.seed);
  const bool zero = std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const auto& kv) { return kv.second == Complex{}; });
  if (zero) {
    report.witness = {ComplexVector(static_cast<std::size_t>(n))};
    return report;
  }
  const int restarts = std::max(1, opts.restarts);
  std::vector<PolyRun> runs(static_cast<std::size_t>(restarts));
  parallel_for(runs.size(), opts.threads, [&](std::size_t r) {
    ComplexVector start;
    if (r == 0) {
      start.assign(static_cast<std::size_t>(n), Complex{1.0});
    } else {
      auto rng = unit_rng(opts.seed, {0x501u, r});
      start = random_sphere_point(n, ball, rng);
    }
    runs[r] = poly_ascent(p, ball, std::move(start), opts.iters);
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].value > runs[best].value) best = r;
  }
  report.value = poly_objective(p, runs[best].point);
  report.witness = {runs[best].point};
  report.samples = restarts;
  return report;
}

AscentRun alternating_ascent(const CoeffTensor& l, BallSpec ball, std::vector<ComplexVector> start, int max_sweeps,
                             double tol, std::vector<double>* trace) {
  if (static_cast<int>(start.size()) != l.arity()) throw std::invalid_argument("alternating_ascent: need m start vectors");
  for (const auto& x : start) {
    if (static_cast<int>(x.size()) != l.dim()) throw std::invalid_argument("alternating_ascent: start vector length != n");
  }
  return run_alternating(FlatForm(l), ball, std::move(start), max_sweeps, tol, trace);
}

EstimateReport sup_mform_ball(const CoeffTensor& l, BallSpec ball, const AscentOptions& opts) {
  const int m = l.arity();
  const int n = l.dim();
  EstimateReport report = empty_report("alternating-slot-ascent", opts.seed);
  const FlatForm form(l);
  if (form.terms() == 0) {
    report.witness.assign(static_cast<std::size_t>(m), ComplexVector(static_cast<std::size_t>(n)));
    return report;
  }

  // Structured start: canonical vectors at the largest coefficient.
  std::size_t top = 0;
  for (std::size_t t = 1; t < form.terms(); ++t) {
    if (std::abs(form.coeffs[t]) > std::abs(form.coeffs[top])) top = t;
  }
  std::vector<ComplexVector> canonical(static_cast<std::size_t>(m), ComplexVector(static_cast<std::size_t>(n)));
  for (int s = 0; s < m; ++s) {
    canonical[static_cast<std::size_t>(s)][static_cast<std::size_t>(form.keys[top * static_cast<std::size_t>(m) + static_cast<std::size_t>(s)])] = 1.0;
  }

  const std::size_t fixed = 1 + opts.warm_starts.size();
  const std::size_t total = fixed + static_cast<std::size_t>(std::max(0, opts.restarts - 1));
  std::vector<AscentRun> runs(total);
  parallel_for(total, opts.threads, [&](std::size_t r) {
    std::vector<ComplexVector> start;
    if (r == 0) {
      start = canonical;
    } else if (r < fixed) {
      start = opts.warm_starts[r - 1];
      if (static_cast<int>(start.size()) != m) throw std::invalid_argument("sup_mform_ball: warm start has wrong arity");
    } else {
      auto rng = unit_rng(opts.seed, {0x502u, r - fixed});
      for (int s = 0; s < m; ++s) start.push_back(random_sphere_point(n, ball, rng));
    }
    runs[r] = run_alternating(form, ball, std::move(start), opts.iters, opts.tol, nullptr);
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].value > runs[best].value) best = r;
  }
  report.value = runs[best].value;
  report.witness = std::move(runs[best].point);
  report.samples = static_cast<std::int64_t>(total);
  return report;
}

}  // namespace polarlab::norms
