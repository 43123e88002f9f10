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

#include <span>
#include <string>
#include <string_view>

#include "polarlab/core/polynomial.hpp"

namespace polarlab::core {

/// Exponent p of an l_p norm, 1 <= p <= infinity. Infinity is a distinct
/// state, never a large finite p.
class PExponent {
 public:
  [[nodiscard]] static PExponent finite(double p);
  [[nodiscard]] static PExponent infinity() { return PExponent(); }
  /// Accepts a decimal number or "inf" / "infinity".
  [[nodiscard]] static PExponent parse(std::string_view text);

  [[nodiscard]] bool is_infinite() const { return infinite_; }
  /// p for finite exponents, +inf otherwise.
  [[nodiscard]] double value() const;
  /// Conjugate exponent q with 1/p + 1/q = 1.
  [[nodiscard]] PExponent dual() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const PExponent&, const PExponent&) = default;

 private:
  PExponent() = default;
  explicit PExponent(double p) : p_(p), infinite_(false) {}

  double p_ = 0.0;
  bool infinite_ = true;
};

[[nodiscard]] double lp_norm(std::span<const Complex> x, PExponent p);

/// Overload for raw exponents; throws std::invalid_argument for p < 1.
[[nodiscard]] double lp_norm(std::span<const Complex> x, double p);

/// Exact maximizer of |sum_j a_j y_j| over the l_p unit ball.
struct DualWitness {
  double value = 0.0;  ///< ||a||_q
  ComplexVector y;     ///< feasible point achieving value
};

/// For a == 0 the value is 0 and y is empty; callers keep their current point.
[[nodiscard]] DualWitness dual_maximizer(std::span<const Complex> a, PExponent p);

}  // namespace polarlab::core
