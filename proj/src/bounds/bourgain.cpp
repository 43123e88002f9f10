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

#include "polarlab/bounds/bourgain.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polarlab/norms/torus.hpp"

namespace polarlab::bounds {

using core::Complex;

BourgainFamily::BourgainFamily(int n_, int m) : n(n_) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("BourgainFamily: m must be even and >= 2 (got " + std::to_string(m) + ")");
  block_size = (2 * n) / m;
  if (block_size < 2) {
    throw std::invalid_argument("BourgainFamily: block size floor(2n/m) = " + std::to_string(block_size) + " < 2");
  }
  for (int k = 1; k <= m / 2; ++k) blocks.emplace_back((k - 1) * block_size, k * block_size);
}

ComplexMatrix BourgainFamily::v(int n, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("BourgainFamily::v: need distinct i, j in 1..n");
  ComplexMatrix out(n, n);
  out(i - 1, j - 1) = 1.0 / static_cast<double>(i - j);
  out(j - 1, i - 1) = 1.0 / static_cast<double>(j - i);
  return out;
}

ComplexMatrix BourgainFamily::coupled(std::span<const Complex> x) {
  const int b = static_cast<int>(x.size());
  ComplexMatrix out(b, b);
  for (int i = 0; i < b; ++i) {
    for (int j = i + 1; j < b; ++j) {
      const Complex w = x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
      out(i, j) = w / static_cast<double>(i - j);
      out(j, i) = w / static_cast<double>(j - i);
    }
  }
  return out;
}

ComplexMatrix BourgainFamily::decoupled(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw std::invalid_argument("BourgainFamily::decoupled: length mismatch");
  const int b = static_cast<int>(x.size());
  ComplexMatrix out(b, b);
  for (int i = 0; i < b; ++i) {
    for (int j = i + 1; j < b; ++j) {
      const Complex w = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      out(i, j) = w / static_cast<double>(i - j);
      out(j, i) = w / static_cast<double>(j - i);
    }
  }
  return out;
}

namespace {

BourgainIntegrals block_integrals(int b, std::int64_t samples, const BourgainOptions& opts, std::uint64_t block) {
  if (b < 2) throw std::invalid_argument("bourgain_integrals: n must be >= 2");
  norms::TorusOptions t;
  t.samples = samples;
  t.seed = opts.seed;
  t.threads = opts.threads;

  BourgainIntegrals out;
  out.n = b;
  t.stream = {block, 1};
  out.one_variable = norms::torus_expectation(
      [](std::span<const Complex> x) { return core::spectral_norm(BourgainFamily::coupled(x)).value; }, b, t);
  t.stream = {block, 2};
  const auto half = static_cast<std::size_t>(b);
  out.two_variable = norms::torus_expectation(
      [half](std::span<const Complex> xy) {
        return core::spectral_norm(BourgainFamily::decoupled(xy.first(half), xy.subspan(half))).value;
      },
      2 * b, t);
  out.one_variable.method = "monte-carlo-torus: ||sum_{i<j} v_ij x_i x_j||";
  out.two_variable.method = "monte-carlo-torus: ||sum_{i<j} v_ij x_i y_j||";
  out.lower_target = std::log(static_cast<double>(b)) - std::numbers::pi;
  out.one_variable_below_pi = out.one_variable.value - out.one_variable.ci_halfwidth <= std::numbers::pi;
  out.two_variable_above_target = out.two_variable.value + out.two_variable.ci_halfwidth >= out.lower_target;
  return out;
}

}  // namespace

BourgainIntegrals bourgain_integrals(int n, const BourgainOptions& opts) { return block_integrals(n, opts.samples, opts, 0); }

BourgainLowerBound bourgain_lower_bound(int m, int n, const BourgainOptions& opts) {
  const BourgainFamily family(n, m);
  const int halves = m / 2;
  const std::int64_t per_factor = opts.samples / halves;
  if (per_factor < 2) throw std::invalid_argument("bourgain_lower_bound: fewer than 2 samples per block factor");

  BourgainLowerBound out;
  out.m = m;
  out.n = n;
  out.block_size = family.block_size;

  double num = 1.0;
  double den = 1.0;
  double rel2 = 0.0;
  for (int k = 0; k < halves; ++k) {
    BourgainIntegrals f = block_integrals(family.block_size, per_factor, opts, static_cast<std::uint64_t>(k));
    num *= f.two_variable.value;
    den *= f.one_variable.value;
    const double r1 = f.one_variable.ci_halfwidth / f.one_variable.value;
    const double r2 = f.two_variable.ci_halfwidth / f.two_variable.value;
    rel2 += r1 * r1 + r2 * r2;
    out.factors.push_back(std::move(f));
  }

  out.statistic.direction = core::Direction::statistical;
  out.statistic.value = num / den;
  out.statistic.ci_halfwidth = out.statistic.value * std::sqrt(rel2);
  out.statistic.samples = per_factor * halves * 2;
  out.statistic.seed = opts.seed;
  out.statistic.method = "product of per-block two-variable integrals over product of one-variable integrals "
                         "(first-order CI)";

  const double log_b = std::log(static_cast<double>(family.block_size));
  out.hypothesis_holds = log_b >= std::numbers::pi;
  if (out.hypothesis_holds) {
    out.closed_form = std::pow((log_b - std::numbers::pi) / std::numbers::pi, static_cast<double>(halves));
    out.meets_closed_form = out.statistic.value + out.statistic.ci_halfwidth >= *out.closed_form;
  }
  return out;
}

}  // namespace polarlab::bounds
