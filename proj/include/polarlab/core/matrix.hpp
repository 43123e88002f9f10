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
#include <span>
#include <stdexcept>
#include <vector>

#include "polarlab/core/polynomial.hpp"

namespace polarlab::core {

/// Dense row-major complex matrix. Used for operators on l_2^n.
class ComplexMatrix {
 public:
  ComplexMatrix(int rows, int cols);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }

  [[nodiscard]] Complex& operator()(int r, int c) { return data_[index(r, c)]; }
  [[nodiscard]] Complex operator()(int r, int c) const { return data_[index(r, c)]; }

  [[nodiscard]] std::span<const Complex> data() const { return data_; }

  /// y = M x
  void apply(std::span<const Complex> x, std::span<Complex> y) const;
  /// y = M^* x
  void apply_adjoint(std::span<const Complex> x, std::span<Complex> y) const;

  [[nodiscard]] ComplexMatrix adjoint() const;
  [[nodiscard]] bool is_finite() const;

  [[nodiscard]] static ComplexMatrix identity(int n);

 private:
  [[nodiscard]] std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_;
  int cols_;
  std::vector<Complex> data_;
};

[[nodiscard]] ComplexMatrix operator*(Complex s, ComplexMatrix m);

/// Raised when power iteration does not meet its tolerance within max_iter.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectralOptions {
  double tol = 1e-10;
  int max_iter = 10000;
  std::uint64_t seed = 0x5eed5eed;
};

struct SpectralResult {
  double value = 0.0;     ///< ||M w|| for the unit vector w below
  ComplexVector witness;  ///< unit right singular vector estimate
  int iterations = 0;
};

/// Largest singular value by power iteration on M^*M from a seeded random
/// start. The value is always ||M w|| for the returned unit w, so it never
/// exceeds the true norm. Throws ConvergenceError past max_iter.
[[nodiscard]] SpectralResult spectral_norm(const ComplexMatrix& m, const SpectralOptions& opts = {});

/// Reusable scratch for repeated spectral norms of same-shape matrices.
class SpectralWorkspace {
 public:
  [[nodiscard]] SpectralResult run(const ComplexMatrix& m, const SpectralOptions& opts);

 private:
  ComplexVector v_, w_, u_;
};

}  // namespace polarlab::core
