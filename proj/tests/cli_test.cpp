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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include "polarlab/cli/commands.hpp"
#include "polarlab/cli/config.hpp"
#include "polarlab/cli/output.hpp"
#include "polarlab/cli/poly_io.hpp"
#include "polarlab/core/errors.hpp"

namespace cli = polarlab::cli;
namespace pc = polarlab::core;
namespace ps = polarlab::shuffle;
namespace fs = std::filesystem;
using pc::Complex;
using pc::MultiIndex;

namespace {

cli::ResolvedConfig config(cli::Subcommand s, std::vector<int> m = {}, std::optional<int> n = {},
                           std::vector<std::string> p = {}) {
  cli::ExperimentConfig raw;
  raw.subcommand = s;
  raw.m = std::move(m);
  raw.n = n;
  raw.p = std::move(p);
  raw.threads = 1;
  return cli::resolve(raw);
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "polarlab_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

// ------------------------------------------------------------ configuration

TEST(Config, DefaultsPerSubcommand) {
  const auto v = config(cli::Subcommand::verify);
  EXPECT_EQ(v.m, std::vector<int>{4});
  EXPECT_EQ(v.n, 3);
  EXPECT_EQ(v.seed, 20190117u);
  const auto b = config(cli::Subcommand::bourgain);
  EXPECT_EQ(b.n, 64);
  EXPECT_EQ(b.samples, 10000);
  EXPECT_TRUE(b.p.front().is_infinite());
}

TEST(Config, FactorialGuardIsNamed) {
  try {
    (void)config(cli::Subcommand::verify, {9});
    FAIL() << "expected rejection";
  } catch (const pc::BudgetError& e) {
    EXPECT_NE(std::string(e.what()).find("m <= 8 factorial enumeration guard"), std::string::npos) << e.what();
  }
  EXPECT_THROW((void)config(cli::Subcommand::shuffle_table, {9}), pc::BudgetError);
  EXPECT_THROW((void)config(cli::Subcommand::shuffle_table, {8}), pc::BudgetError);
  EXPECT_THROW((void)config(cli::Subcommand::verify, {7}), pc::BudgetError);
  EXPECT_THROW((void)config(cli::Subcommand::verify, {4}, 6), pc::BudgetError);
}

TEST(Config, RejectsInvalidValues) {
  EXPECT_THROW((void)config(cli::Subcommand::bounds, {2}, 8, {"0.5"}), cli::ConfigError);
  EXPECT_THROW((void)config(cli::Subcommand::bounds, {2}, 8, {"x"}), cli::ConfigError);
  EXPECT_THROW((void)config(cli::Subcommand::bourgain, {3}), cli::ConfigError);
  EXPECT_THROW((void)config(cli::Subcommand::bourgain, {4}, 3), cli::ConfigError);
  EXPECT_THROW((void)config(cli::Subcommand::bounds, {0}), cli::ConfigError);
  EXPECT_THROW((void)cli::parse_format("xml"), cli::ConfigError);
  EXPECT_THROW((void)cli::parse_subcommand("run"), cli::ConfigError);
  EXPECT_EQ(cli::parse_format("table"), cli::OutputFormat::table);
}

TEST(Config, EchoOmitsOutputPath) {
  cli::ExperimentConfig raw;
  raw.subcommand = cli::Subcommand::shuffle_table;
  raw.out = "/tmp/somewhere.json";
  raw.threads = 1;
  const auto echo = cli::echo(cli::resolve(raw));
  EXPECT_FALSE(echo.contains("out"));
  EXPECT_EQ(echo["subcommand"], "shuffle-table");
}

// ------------------------------------------------------------ polynomial files

TEST(PolyIO, RoundTripIsBitExact) {
  pc::HomPolynomial p(3, 4);
  const double awkward[] = {0.1, 1.0 / 3.0, -0.0, 5e-324, 1.7976931348623157e308, -2.2250738585072014e-308,
                            std::nextafter(1.0, 2.0), 123456789.123456789};
  std::mt19937_64 rng(1);
  int slot = 0;
  pc::for_each_nondecreasing_index(3, 4, [&](const MultiIndex& j) {
    const double re = awkward[slot % 8];
    const double im = awkward[(slot * 3 + 1) % 8] * (slot % 2 ? -1.0 : 1.0);
    p.set(j, {re, im});
    ++slot;
  });
  const fs::path path = scratch("roundtrip.json");
  cli::write_polynomial(path.string(), p);
  const pc::HomPolynomial q = cli::read_polynomial(path.string());
  ASSERT_EQ(q.degree(), 3);
  ASSERT_EQ(q.dim(), 4);
  ASSERT_EQ(q.size(), p.size());
  for (const auto& [j, c] : p.coeffs()) {
    const Complex d = q.coeff(j);
    EXPECT_EQ(std::memcmp(&c, &d, sizeof(Complex)), 0) << j.to_string();
  }
}

TEST(PolyIO, RejectsMalformedRecords) {
  using nlohmann::json;
  EXPECT_THROW((void)cli::polynomial_from_json(json::array()), std::invalid_argument);
  EXPECT_THROW((void)cli::polynomial_from_json(json::parse(R"([{"index":[2,1],"re":1,"im":0}])")),
               std::invalid_argument);
  EXPECT_THROW((void)cli::polynomial_from_json(
                   json::parse(R"([{"index":[1,2],"re":1,"im":0},{"index":[1],"re":1,"im":0}])")),
               std::invalid_argument);
  EXPECT_THROW((void)cli::polynomial_from_json(json::parse(R"([{"index":[1,5],"re":1,"im":0}])"), 3),
               std::invalid_argument);
  EXPECT_THROW((void)cli::polynomial_from_json(json::parse(R"([{"index":[1,2],"re":"1","im":0}])")),
               std::invalid_argument);
  const auto p = cli::polynomial_from_json(json::parse(R"([{"index":[1,2],"re":1,"im":0}])"), 5);
  EXPECT_EQ(p.dim(), 5);
}

// ------------------------------------------------------------ commands

TEST(Commands, VerifyPassesByDefault) {
  const cli::CommandOutput out = cli::run(config(cli::Subcommand::verify));
  EXPECT_EQ(out.exit_code, 0);
  const auto& results = out.document["results"];
  ASSERT_EQ(results.size(), 6u);
  for (const auto& r : results) EXPECT_TRUE(r["passed"].get<bool>()) << r["kind"];
  EXPECT_EQ(out.document["schema_version"], cli::kSchemaVersion);
}

TEST(Commands, VerifyReportsTamperedRecursionWeight) {
  cli::RunHooks hooks;
  hooks.recursion_weight = [](int m, int n, int k) { return Complex(-1.0) * ps::mask_R(m, n, k); };
  const cli::CommandOutput out = cli::run(config(cli::Subcommand::verify), hooks);
  EXPECT_EQ(out.exit_code, 1);
  bool found = false;
  for (const auto& r : out.document["results"]) {
    if (r["kind"] != "coefficient-recursion") continue;
    found = true;
    EXPECT_FALSE(r["passed"].get<bool>());
    const auto& ce = r["details"]["counterexample"];
    EXPECT_EQ(ce["index"].size(), 4u);
    EXPECT_TRUE(ce.contains("expected"));
  }
  EXPECT_TRUE(found);
}

TEST(Commands, ShuffleTableRows) {
  const auto three = cli::run(config(cli::Subcommand::shuffle_table, {3})).document["results"];
  ASSERT_EQ(three.size(), 3u);
  const auto& last = three[2]["rows"];
  ASSERT_EQ(last.size(), 6u);
  for (const auto& row : last) EXPECT_NEAR(row["probability"].get<double>(), 1.0 / 6.0, 1e-15);

  const auto two = cli::run(config(cli::Subcommand::shuffle_table, {2})).document["results"];
  ASSERT_EQ(two[1]["rows"].size(), 2u);
  for (const auto& row : two[1]["rows"]) EXPECT_EQ(row["probability"].get<double>(), 0.5);
}

TEST(Commands, ShuffleTableWithPolynomial) {
  const fs::path path = scratch("product.json");
  cli::write_polynomial(path.string(), pc::HomPolynomial::product(3, 3));
  cli::ExperimentConfig raw;
  raw.subcommand = cli::Subcommand::shuffle_table;
  raw.poly = path.string();
  raw.threads = 1;
  const auto results = cli::run(cli::resolve(raw)).document["results"];
  ASSERT_EQ(results.size(), 6u);
  const auto& s1 = results[4];
  EXPECT_EQ(s1["kind"], "shuffled-lift");
  EXPECT_EQ(s1["summary"]["k"], 1);
  ASSERT_EQ(s1["rows"].size(), 3u);
  std::vector<std::vector<int>> seen;
  for (const auto& row : s1["rows"]) {
    EXPECT_NEAR(row["re"].get<double>(), 1.0 / 3.0, 1e-15);
    seen.push_back(row["index"].get<std::vector<int>>());
  }
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}}));
}

TEST(Commands, BoundsGridShowsProductRatios) {
  const auto results = cli::run(config(cli::Subcommand::bounds, {2, 3}, 8, {"1"})).document["results"];
  ASSERT_EQ(results.size(), 2u);
  EXPECT_NEAR(results[0]["summary"]["lower"].get<double>(), 4.0, 1e-5);
  EXPECT_NEAR(results[1]["summary"]["lower"].get<double>(), 27.0, 1e-5);
  for (const auto& r : results) EXPECT_TRUE(r["passed"].get<bool>());
}

TEST(Commands, BoundsAtInfinityCarriesBlockStatistic) {
  cli::ExperimentConfig raw;
  raw.subcommand = cli::Subcommand::bounds;
  raw.m = {2};
  raw.n = 16;
  raw.samples = 300;
  raw.threads = 1;
  const auto r = cli::run(cli::resolve(raw)).document["results"][0];
  EXPECT_TRUE(r["summary"]["block_statistic"].is_number());
  EXPECT_TRUE(r["summary"]["chain_passed"].is_null());  // n = 16 is outside the chain budget
  EXPECT_NEAR(r["summary"]["upper"].get<double>(), 4.0 * std::exp(2.0) * std::log2(32.0), 1e-9);
}

TEST(Commands, EstimateNormReportsAllThreeSups) {
  const auto results = cli::run(config(cli::Subcommand::estimate_norm, {3}, 3, {"2", "inf"})).document["results"];
  ASSERT_EQ(results.size(), 6u);
  for (std::size_t k = 0; k < results.size(); k += 3) {
    const double poly = results[k]["summary"]["value"].get<double>();
    const double lift = results[k + 1]["summary"]["value"].get<double>();
    const double polar = results[k + 2]["summary"]["value"].get<double>();
    EXPECT_GE(lift, poly * (1.0 - 1e-9));
    EXPECT_GE(polar, poly * (1.0 - 1e-9));
  }
}

TEST(Commands, OutputIsReproducibleWithoutTiming) {
  const auto c = config(cli::Subcommand::verify);
  const std::string a = cli::render(cli::run(c).document, cli::OutputFormat::json);
  const std::string b = cli::render(cli::run(c).document, cli::OutputFormat::json);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("wall_seconds"), std::string::npos);
}

TEST(Output, CsvAndTableLayouts) {
  const auto doc = cli::run(config(cli::Subcommand::shuffle_table, {2})).document;
  const std::string csv = cli::render(doc, cli::OutputFormat::csv);
  EXPECT_EQ(csv.rfind("result,kind,record,passed", 0), 0u);
  EXPECT_NE(csv.find("fy-distribution,row,,,,,,2 1,0.5"), std::string::npos) << csv;
  const std::string table = cli::render(doc, cli::OutputFormat::table);
  EXPECT_NE(table.find("[1] fy-distribution"), std::string::npos);
  EXPECT_NE(table.find("permutation"), std::string::npos);
}

// ------------------------------------------------------------ executable

TEST(Executable, ExitCodesAndMessages) {
  const fs::path err = scratch("stderr.txt");
  const fs::path out = scratch("stdout.json");
  const std::string exe = POLARLAB_CLI_PATH;
  auto status = [](int raw) { return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1; };

  EXPECT_EQ(status(std::system((exe + " verify --m 9 2> " + err.string()).c_str())), 2);
  EXPECT_NE(slurp(err).find("m <= 8 factorial enumeration guard"), std::string::npos);
  EXPECT_EQ(status(std::system((exe + " bounds --p 0.5 2> " + err.string()).c_str())), 2);
  EXPECT_EQ(status(std::system((exe + " verify --threads 1 --out " + out.string()).c_str())), 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(doc["schema_version"], cli::kSchemaVersion);
  EXPECT_EQ(doc["timing"]["recorded"], false);
}
