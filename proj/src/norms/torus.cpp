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

#include "polarlab/norms/torus.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace polarlab::norms {

namespace {

std::mt19937_64 sampler_rng(std::uint64_t seed, std::span<const std::uint64_t> path) {
  std::vector<std::uint32_t> words;
  auto push = [&words](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(0x70727573u);  // torus stream tag
  push(seed);
  for (auto p : path) push(p);
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

// Running mean/M2 (Welford) per chunk, merged in chunk order.
struct Moments {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const auto total = count + o.count;
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.count) / static_cast<double>(total);
    m2 += o.m2 + d * d * static_cast<double>(count) * static_cast<double>(o.count) / static_cast<double>(total);
    count = total;
  }
};

}  // namespace

TorusSampler::TorusSampler(int n, std::uint64_t seed, std::vector<std::uint64_t> path)
    : n_(n), rng_(sampler_rng(seed, path)), angle_(0.0, 2.0 * std::numbers::pi) {
  if (n < 1) throw std::invalid_argument("TorusSampler: n must be >= 1");
}

void TorusSampler::next(std::span<Complex> out) {
  if (static_cast<int>(out.size()) != n_) throw std::invalid_argument("TorusSampler::next: wrong output length");
  for (auto& z : out) {
    const double t = angle_(rng_);
    z = Complex(std::cos(t), std::sin(t));
  }
}

core::ComplexVector TorusSampler::next() {
  core::ComplexVector out(static_cast<std::size_t>(n_));
  next(out);
  return out;
}

core::EstimateReport torus_expectation(const TorusIntegrand& integrand, int dim, const TorusOptions& opts) {
  if (opts.samples < 2) throw std::invalid_argument("torus_expectation: need at least 2 samples");
  if (dim < 1) throw std::invalid_argument("torus_expectation: dimension must be >= 1");
  if (opts.chunk < 1) throw std::invalid_argument("torus_expectation: chunk must be >= 1");

  const auto chunks = static_cast<std::size_t>((opts.samples + opts.chunk - 1) / opts.chunk);
  std::vector<Moments> parts(chunks);
  parallel_for(chunks, opts.threads, [&](std::size_t c) {
    std::vector<std::uint64_t> path = opts.stream;
    path.push_back(c);
    TorusSampler sampler(dim, opts.seed, std::move(path));
    core::ComplexVector x(static_cast<std::size_t>(dim));
    const std::int64_t begin = static_cast<std::int64_t>(c) * opts.chunk;
    const std::int64_t end = std::min(opts.samples, begin + opts.chunk);
    for (std::int64_t s = begin; s < end; ++s) {
      sampler.next(x);
      const double v = integrand(x);
      if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "torus_expectation: integrand returned " << v << " at sample " << s << " (chunk " << c << ", seed "
           << opts.seed << ")";
        throw std::runtime_error(os.str());
      }
      parts[c].push(v);
    }
  });

  Moments all;
  for (const auto& p : parts) all.merge(p);

  core::EstimateReport report;
  report.direction = core::Direction::statistical;
  report.value = all.mean;
  report.samples = all.count;
  const double var = all.m2 / static_cast<double>(all.count - 1);
  report.ci_halfwidth = kZ99 * std::sqrt(std::max(var, 0.0) / static_cast<double>(all.count));
  report.seed = opts.seed;
  report.method = "monte-carlo-torus";
  return report;
}

}  // namespace polarlab::norms
