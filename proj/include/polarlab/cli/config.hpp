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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polarlab/core/lp_norm.hpp"

namespace polarlab::cli {

inline constexpr std::string_view kSchemaVersion = "polarlab.report/1";

enum class Subcommand { verify, bounds, shuffle_table, estimate_norm, bourgain };
enum class OutputFormat { json, csv, table };

[[nodiscard]] std::string_view to_string(Subcommand s);
[[nodiscard]] std::string_view to_string(OutputFormat f);
[[nodiscard]] Subcommand parse_subcommand(std::string_view s);
[[nodiscard]] OutputFormat parse_format(std::string_view s);

/// Rejected configuration. Raised before any numerical work starts.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raw flags as parsed from the command line. Unset optionals fall back to
/// per-subcommand defaults in resolve().
struct ExperimentConfig {
  Subcommand subcommand = Subcommand::verify;
  std::vector<int> m;
  std::optional<int> n;
  std::vector<std::string> p;
  std::optional<std::int64_t> samples;
  std::optional<int> restarts;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> out;
  std::optional<std::string> poly;
  bool timing = false;
};

/// Fully validated configuration.
struct ResolvedConfig {
  Subcommand subcommand = Subcommand::verify;
  std::vector<int> m;
  int n = 0;
  std::vector<core::PExponent> p;
  std::int64_t samples = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> out;
  std::optional<std::string> poly;
  bool timing = false;
};

/// Applies defaults and checks every precondition of the dispatched
/// operation. Throws ConfigError or core::BudgetError. When a polynomial file
/// is given, m and n are taken from it (an explicit --n must cover its indices).
[[nodiscard]] ResolvedConfig resolve(const ExperimentConfig& raw);

/// Config echo for reports. The output path is deliberately left out so that
/// reruns into different files stay byte-identical.
[[nodiscard]] nlohmann::ordered_json echo(const ResolvedConfig& c);

}  // namespace polarlab::cli
