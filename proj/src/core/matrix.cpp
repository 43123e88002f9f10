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

#include "polarlab/core/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace polarlab::core {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Complex{});
}

void ComplexMatrix::apply(std::span<const Complex> x, std::span<Complex> y) const {
  if (static_cast<int>(x.size()) != cols_ || static_cast<int>(y.size()) != rows_) {
    throw std::invalid_argument("ComplexMatrix::apply: dimension mismatch");
  }
  // Products are spelled out in real arithmetic: std::complex multiplication
  // carries NaN recovery that blocks vectorization.
  for (int r = 0; r < rows_; ++r) {
    const Complex* row = data_.data() + index(r, 0);
    double re = 0.0;
    double im = 0.0;
    for (int c = 0; c < cols_; ++c) {
      const Complex a = row[c];
      const Complex b = x[static_cast<std::size_t>(c)];
      re += a.real() * b.real() - a.imag() * b.imag();
      im += a.real() * b.imag() + a.imag() * b.real();
    }
    y[static_cast<std::size_t>(r)] = Complex(re, im);
  }
}

void ComplexMatrix::apply_adjoint(std::span<const Complex> x, std::span<Complex> y) const {
  if (static_cast<int>(x.size()) != rows_ || static_cast<int>(y.size()) != cols_) {
    throw std::invalid_argument("ComplexMatrix::apply_adjoint: dimension mismatch");
  }
  std::fill(y.begin(), y.end(), Complex{});
  for (int r = 0; r < rows_; ++r) {
    const Complex* row = data_.data() + index(r, 0);
    const Complex xr = x[static_cast<std::size_t>(r)];
    for (int c = 0; c < cols_; ++c) {
      const Complex a = row[c];
      auto& out = y[static_cast<std::size_t>(c)];
      out = Complex(out.real() + a.real() * xr.real() + a.imag() * xr.imag(),
                    out.imag() + a.real() * xr.imag() - a.imag() * xr.real());
    }
  }
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

bool ComplexMatrix::is_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix out(n, n);
  for (int k = 0; k < n; ++k) out(k, k) = 1.0;
  return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) m(r, c) *= s;
  }
  return m;
}

namespace {

double norm2(std::span<const Complex> x) {
  double peak = 0.0;
  for (const auto& z : x) peak = std::max(peak, std::abs(z));
  if (peak == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z / peak);
  return peak * std::sqrt(s);
}

}  // namespace

SpectralResult spectral_norm(const ComplexMatrix& m, const SpectralOptions& opts) {
  SpectralWorkspace ws;
  return ws.run(m, opts);
}

SpectralResult SpectralWorkspace::run(const ComplexMatrix& m, const SpectralOptions& opts) {
  if (!m.is_finite()) throw std::invalid_argument("spectral_norm: matrix has non-finite entries");
  if (!(opts.tol > 0.0) || opts.max_iter < 1) throw std::invalid_argument("spectral_norm: bad options");

  const auto cols = static_cast<std::size_t>(m.cols());
  const auto rows = static_cast<std::size_t>(m.rows());
  v_.resize(cols);
  w_.resize(rows);
  u_.resize(cols);

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss;
  for (auto& z : v_) z = Complex(gauss(rng), gauss(rng));
  double nv = norm2(v_);
  for (auto& z : v_) z /= nv;

  SpectralResult res;
  double sigma = 0.0;
  double prev_delta = 0.0;
  for (int it = 1; it <= opts.max_iter; ++it) {
    m.apply(v_, w_);
    const double next = norm2(w_);
    res.iterations = it;
    if (next == 0.0) {
      // M v = 0 after at least one M^*M step means M = 0 on the Krylov space
      // of a generic start, i.e. M = 0.
      res.value = 0.0;
      res.witness = v_;
      return res;
    }
    const double delta = next - sigma;  // nondecreasing for power iteration
    sigma = next;
    // Geometric tail estimate: remaining gap ~ delta * r / (1 - r).
    bool done = false;
    if (it > 1) {
      if (delta <= 0.0) {
        done = true;
      } else if (prev_delta > 0.0) {
        const double r = std::min(delta / prev_delta, 0.999999);
        done = delta * r / (1.0 - r) <= opts.tol * sigma && delta <= opts.tol * sigma;
      }
    }
    prev_delta = delta;
    if (done) {
      res.value = sigma;
      res.witness = v_;
      return res;
    }
    m.apply_adjoint(w_, u_);
    nv = norm2(u_);
    for (std::size_t k = 0; k < cols; ++k) v_[k] = u_[k] / nv;
  }
  throw ConvergenceError("spectral_norm: no convergence after " + std::to_string(opts.max_iter) +
                         " iterations (last estimate " + std::to_string(sigma) + ")");
}

}  // namespace polarlab::core
