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

#include "polarlab/core/coeff_tensor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace polarlab::core {

CoeffTensor::CoeffTensor(int m, int n) : m_(m), n_(n) {
  if (m < 1 || m > kMaxArity) throw std::invalid_argument("CoeffTensor: arity out of range");
  if (n < 1) throw std::invalid_argument("CoeffTensor: dimension must be >= 1");
}

void CoeffTensor::check_key(const MultiIndex& i) const {
  if (i.arity() != m_ || i.dim() != n_) {
    throw std::invalid_argument("CoeffTensor: key " + i.to_string() + " has shape (" + std::to_string(i.arity()) +
                                "," + std::to_string(i.dim()) + "), expected (" + std::to_string(m_) + "," +
                                std::to_string(n_) + ")");
  }
}

Complex CoeffTensor::coeff(const MultiIndex& i) const {
  check_key(i);
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Complex{} : it->second;
}

void CoeffTensor::set(const MultiIndex& i, Complex c) {
  check_key(i);
  coeffs_[i] = c;
}

void CoeffTensor::add(const MultiIndex& i, Complex c) {
  check_key(i);
  coeffs_[i] += c;
}

void CoeffTensor::prune(double tol) {
  std::erase_if(coeffs_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

CoeffTensor& CoeffTensor::operator*=(Complex s) {
  for (auto& [key, c] : coeffs_) c *= s;
  return *this;
}

CoeffTensor& CoeffTensor::operator+=(const CoeffTensor& other) {
  if (other.m_ != m_ || other.n_ != n_) throw std::invalid_argument("CoeffTensor: shape mismatch in +=");
  for (const auto& [key, c] : other.coeffs_) coeffs_[key] += c;
  return *this;
}

CoeffTensor operator+(CoeffTensor a, const CoeffTensor& b) {
  a += b;
  return a;
}

CoeffTensor operator-(CoeffTensor a, const CoeffTensor& b) {
  a += Complex{-1.0} * b;
  return a;
}

CoeffTensor operator*(Complex s, CoeffTensor a) {
  a *= s;
  return a;
}

double max_abs_diff(const CoeffTensor& a, const CoeffTensor& b) {
  if (a.arity() != b.arity() || a.dim() != b.dim()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double worst = 0.0;
  auto ia = a.coeffs().begin();
  auto ib = b.coeffs().begin();
  const auto ea = a.coeffs().end();
  const auto eb = b.coeffs().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      worst = std::max(worst, std::abs(ia->second));
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      worst = std::max(worst, std::abs(ib->second));
      ++ib;
    } else {
      worst = std::max(worst, std::abs(ia->second - ib->second));
      ++ia;
      ++ib;
    }
  }
  return worst;
}

bool is_slot_symmetric(const CoeffTensor& t, double tol) {
  // Compare every entry against the entry at its sorted key; any permutation
  // of a key sorts to the same representative.
  std::map<MultiIndex, Complex> representative;
  bool ok = true;
  for_each_multi_index(t.arity(), t.dim(), [&](const MultiIndex& i) {
    if (!ok) return;
    const Complex c = t.coeff(i);
    auto [it, inserted] = representative.try_emplace(i.sorted(), c);
    if (!inserted && std::abs(it->second - c) > tol) ok = false;
  });
  return ok;
}

}  // namespace polarlab::core
