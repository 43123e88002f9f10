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

#include "polarlab/core/lp_norm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace polarlab::core {

PExponent PExponent::finite(double p) {
  if (std::isnan(p) || p < 1.0) throw std::invalid_argument("l_p exponent must satisfy p >= 1 (got " + std::to_string(p) + ")");
  if (std::isinf(p)) return infinity();
  return PExponent(p);
}

PExponent PExponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") return infinity();
  double p = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, p);
  if (ec != std::errc{} || ptr != end) throw std::invalid_argument("cannot parse l_p exponent '" + std::string(text) + "'");
  return finite(p);
}

double PExponent::value() const { return infinite_ ? std::numeric_limits<double>::infinity() : p_; }

PExponent PExponent::dual() const {
  if (infinite_) return finite(1.0);
  if (p_ == 1.0) return infinity();
  return finite(p_ / (p_ - 1.0));
}

std::string PExponent::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << p_;
  return os.str();
}

double lp_norm(std::span<const Complex> x, PExponent p) {
  double peak = 0.0;
  for (const auto& z : x) peak = std::max(peak, std::abs(z));
  if (p.is_infinite() || peak == 0.0) return peak;
  const double e = p.value();
  if (e == 1.0) {
    double s = 0.0;
    for (const auto& z : x) s += std::abs(z);
    return s;
  }
  // Scale by the peak so |z|^p cannot overflow or flush to zero.
  double s = 0.0;
  for (const auto& z : x) s += std::pow(std::abs(z) / peak, e);
  return peak * std::pow(s, 1.0 / e);
}

double lp_norm(std::span<const Complex> x, double p) { return lp_norm(x, PExponent::finite(p)); }

DualWitness dual_maximizer(std::span<const Complex> a, PExponent p) {
  DualWitness out;
  const PExponent q = p.dual();
  out.value = lp_norm(a, q);
  if (out.value == 0.0) return out;
  out.y.assign(a.size(), Complex{});

  auto phase = [](Complex z) { return std::conj(z) / std::abs(z); };

  if (p.is_infinite()) {
    for (std::size_t j = 0; j < a.size(); ++j) out.y[j] = a[j] == Complex{} ? Complex{1.0} : phase(a[j]);
  } else if (p.value() == 1.0) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < a.size(); ++j) {
      if (std::abs(a[j]) > std::abs(a[best])) best = j;
    }
    out.y[best] = phase(a[best]);
  } else {
    const double qv = q.value();
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] == Complex{}) continue;
      out.y[j] = phase(a[j]) * std::pow(std::abs(a[j]) / out.value, qv - 1.0);
    }
  }
  return out;
}

}  // namespace polarlab::core
