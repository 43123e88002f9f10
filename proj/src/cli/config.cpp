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

#include "polarlab/cli/config.hpp"

#include <algorithm>

#include "polarlab/cli/poly_io.hpp"
#include "polarlab/core/errors.hpp"
#include "polarlab/core/multi_index.hpp"
#include "polarlab/norms/parallel.hpp"
#include "polarlab/shuffle/permutation.hpp"
#include "polarlab/shuffle/recursion.hpp"

namespace polarlab::cli {

std::string_view to_string(Subcommand s) {
  switch (s) {
    case Subcommand::verify: return "verify";
    case Subcommand::bounds: return "bounds";
    case Subcommand::shuffle_table: return "shuffle-table";
    case Subcommand::estimate_norm: return "estimate-norm";
    case Subcommand::bourgain: return "bourgain";
  }
  return "?";
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::table: return "table";
  }
  return "?";
}

Subcommand parse_subcommand(std::string_view s) {
  for (auto c : {Subcommand::verify, Subcommand::bounds, Subcommand::shuffle_table, Subcommand::estimate_norm,
                 Subcommand::bourgain}) {
    if (to_string(c) == s) return c;
  }
  throw ConfigError("unknown subcommand '" + std::string(s) + "'");
}

OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "table" || s == "pretty-table") return OutputFormat::table;
  throw ConfigError("unknown format '" + std::string(s) + "' (expected json, csv or table)");
}

namespace {

struct Defaults {
  std::vector<int> m;
  int n;
  std::int64_t samples;
  int restarts;
};

Defaults defaults_for(Subcommand s) {
  switch (s) {
    case Subcommand::verify: return {{4}, 3, 0, 0};
    case Subcommand::bounds: return {{2, 3}, 8, 2000, 64};
    case Subcommand::shuffle_table: return {{3}, 3, 0, 0};
    case Subcommand::estimate_norm: return {{3}, 3, 0, 32};
    case Subcommand::bourgain: return {{2}, 64, 10000, 0};
  }
  return {{2}, 2, 0, 0};
}

std::string name(Subcommand s) { return std::string(to_string(s)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

void check_enumeration_guard(Subcommand s, int m) {
  if (m > shuffle::kMaxEnumeratedArity) {
    throw core::BudgetError(name(s) + ": m = " + std::to_string(m) + " exceeds the m <= " +
                            std::to_string(shuffle::kMaxEnumeratedArity) + " factorial enumeration guard");
  }
}

}  // namespace

ResolvedConfig resolve(const ExperimentConfig& raw) {
  const Defaults d = defaults_for(raw.subcommand);
  const std::string cmd = name(raw.subcommand);
  ResolvedConfig c;
  c.subcommand = raw.subcommand;
  c.format = raw.format;
  c.out = raw.out;
  c.poly = raw.poly;
  c.timing = raw.timing;
  c.m = raw.m.empty() ? d.m : raw.m;
  c.n = raw.n.value_or(d.n);

  if (raw.poly) {
    require(raw.subcommand != Subcommand::bourgain, "bourgain: --poly is not used by this subcommand");
    const core::HomPolynomial p = read_polynomial(*raw.poly, raw.n);
    require(raw.m.empty() || (raw.m.size() == 1 && raw.m.front() == p.degree()),
            cmd + ": --m conflicts with the degree of the polynomial in " + *raw.poly);
    c.m = {p.degree()};
    c.n = p.dim();
  }

  for (int m : c.m) require(m >= 1 && m <= core::kMaxArity, cmd + ": m = " + std::to_string(m) + " out of range 1..12");
  require(c.n >= 1, cmd + ": n must be >= 1");

  if (raw.p.empty()) {
    c.p = {core::PExponent::infinity()};
  } else {
    for (const auto& text : raw.p) {
      try {
        c.p.push_back(core::PExponent::parse(text));
      } catch (const std::exception& e) {
        throw ConfigError(cmd + ": invalid p '" + text + "': " + e.what());
      }
    }
  }

  c.samples = raw.samples.value_or(d.samples);
  c.restarts = raw.restarts.value_or(d.restarts);
  c.seed = raw.seed.value_or(norms::kDefaultSeed);
  require(!raw.threads || *raw.threads >= 0, cmd + ": --threads must be >= 0");
  c.threads = norms::resolve_threads(raw.threads.value_or(0));

  switch (c.subcommand) {
    case Subcommand::verify:
      require(c.m.size() == 1, "verify: takes a single m");
      check_enumeration_guard(c.subcommand, c.m.front());
      require(c.m.front() >= 2, "verify: m must be >= 2");
      if (c.m.front() > shuffle::kRecursionMaxArity || c.n > shuffle::kRecursionMaxDim) {
        throw core::BudgetError("verify: (m, n) = (" + std::to_string(c.m.front()) + ", " + std::to_string(c.n) +
                                ") exceeds the exact-suite budget m <= 6, n <= 5");
      }
      break;
    case Subcommand::shuffle_table:
      require(c.m.size() == 1, "shuffle-table: takes a single m");
      check_enumeration_guard(c.subcommand, c.m.front());
      require(c.m.front() >= 2, "shuffle-table: m must be >= 2");
      if (c.m.front() > 7) throw core::BudgetError("shuffle-table: m = " + std::to_string(c.m.front()) + " exceeds m <= 7");
      break;
    case Subcommand::bounds:
      require(c.samples >= 2, "bounds: --samples must be >= 2");
      require(c.restarts >= 1, "bounds: --restarts must be >= 1");
      break;
    case Subcommand::estimate_norm:
      require(c.m.size() == 1, "estimate-norm: takes a single m");
      require(c.restarts >= 1, "estimate-norm: --restarts must be >= 1");
      break;
    case Subcommand::bourgain:
      require(c.samples >= 2, "bourgain: --samples must be >= 2");
      for (int m : c.m) {
        require(m % 2 == 0, "bourgain: m = " + std::to_string(m) + " must be even");
        require(c.samples / (m / 2) >= 2, "bourgain: --samples too small for m = " + std::to_string(m));
        require((2 * c.n) / m >= 2,
                "bourgain: block size floor(2n/m) = " + std::to_string((2 * c.n) / m) + " must be >= 2");
      }
      break;
  }
  return c;
}

nlohmann::ordered_json echo(const ResolvedConfig& c) {
  nlohmann::ordered_json j;
  j["subcommand"] = to_string(c.subcommand);
  j["m"] = c.m;
  j["n"] = c.n;
  auto ps = nlohmann::ordered_json::array();
  for (const auto& p : c.p) ps.push_back(p.to_string());
  j["p"] = ps;
  j["samples"] = c.samples;
  j["restarts"] = c.restarts;
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  j["format"] = to_string(c.format);
  j["poly"] = c.poly ? nlohmann::ordered_json(*c.poly) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace polarlab::cli
