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

#include "polarlab/cli/poly_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace polarlab::cli {

using nlohmann::ordered_json;

ordered_json complex_to_json(core::Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

namespace {

ordered_json records(const std::map<core::MultiIndex, core::Complex>& coeffs) {
  auto out = ordered_json::array();
  for (const auto& [j, c] : coeffs) {
    ordered_json r;
    r["index"] = std::vector<int>(j.entries().begin(), j.entries().end());
    r["re"] = c.real();
    r["im"] = c.imag();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

ordered_json polynomial_to_json(const core::HomPolynomial& p) { return records(p.coeffs()); }
ordered_json tensor_to_json(const core::CoeffTensor& t) { return records(t.coeffs()); }

core::HomPolynomial polynomial_from_json(const nlohmann::json& doc, std::optional<int> n_given) {
  if (!doc.is_array() || doc.empty()) throw std::invalid_argument("polynomial: expected a non-empty list of records");
  int m = -1;
  int n = n_given.value_or(1);
  std::vector<std::pair<std::vector<int>, core::Complex>> terms;
  for (std::size_t r = 0; r < doc.size(); ++r) {
    const auto& rec = doc[r];
    const std::string where = "polynomial record " + std::to_string(r);
    if (!rec.is_object() || !rec.contains("index") || !rec.contains("re") || !rec.contains("im")) {
      throw std::invalid_argument(where + ": needs index, re and im");
    }
    if (!rec["index"].is_array() || !rec["re"].is_number() || !rec["im"].is_number()) {
      throw std::invalid_argument(where + ": index must be a list, re and im numbers");
    }
    std::vector<int> idx;
    for (const auto& e : rec["index"]) {
      if (!e.is_number_integer() || e.get<int>() < 1) throw std::invalid_argument(where + ": entries must be integers >= 1");
      idx.push_back(e.get<int>());
    }
    if (idx.empty()) throw std::invalid_argument(where + ": empty index");
    if (m < 0) m = static_cast<int>(idx.size());
    if (static_cast<int>(idx.size()) != m) throw std::invalid_argument(where + ": degree differs from the first record");
    if (!std::is_sorted(idx.begin(), idx.end())) throw std::invalid_argument(where + ": index must be nondecreasing");
    n = std::max(n, idx.back());
    terms.emplace_back(std::move(idx), core::Complex(rec["re"].get<double>(), rec["im"].get<double>()));
  }
  if (n_given && n > *n_given) {
    throw std::invalid_argument("polynomial: index entry " + std::to_string(n) + " exceeds n = " + std::to_string(*n_given));
  }
  core::HomPolynomial p(m, n);
  for (const auto& [idx, c] : terms) p.add(core::MultiIndex(idx, n), c);
  return p;
}

core::HomPolynomial read_polynomial(const std::string& path, std::optional<int> n_given) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open polynomial file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("polynomial file '" + path + "': " + e.what());
  }
  return polynomial_from_json(doc, n_given);
}

void write_polynomial(const std::string& path, const core::HomPolynomial& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << polynomial_to_json(p).dump(2) << "\n";
}

}  // namespace polarlab::cli
