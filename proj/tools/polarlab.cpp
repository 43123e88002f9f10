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

// polarlab: experiment runner for polarization and shuffle-symmetrization
// constants of homogeneous polynomials.

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polarlab/cli/commands.hpp"
#include "polarlab/cli/config.hpp"
#include "polarlab/cli/output.hpp"
#include "polarlab/core/errors.hpp"

namespace {

struct Flags {
  std::vector<int> m;
  std::optional<int> n;
  std::vector<std::string> p;
  std::optional<std::int64_t> samples;
  std::optional<int> restarts;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::string format = "json";
  std::string out;
  std::optional<std::string> poly;
  bool timing = false;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--m", f.m, "degree m; comma-separated list for grids")->delimiter(',');
  sub->add_option("--n", f.n, "dimension n");
  sub->add_option("--p", f.p, "exponent p >= 1 or 'inf'; comma-separated list for grids")->delimiter(',');
  sub->add_option("--samples", f.samples, "Monte Carlo samples");
  sub->add_option("--restarts", f.restarts, "restarts per sup estimate");
  sub->add_option("--seed", f.seed, "base seed (default 20190117)");
  sub->add_option("--threads", f.threads, "worker threads (0: POLARLAB_THREADS or 1)");
  sub->add_option("--format", f.format, "json, csv or table");
  sub->add_option("--out", f.out, "output file (default stdout)");
  sub->add_option("--poly", f.poly, "polynomial file: JSON list of {index, re, im}");
  sub->add_flag("--timing", f.timing, "record wall-clock time in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polarlab: polarization constants, shuffle symmetrization and norm experiments"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> subs = {
      {"verify", "run the exact-identity suite on a random or given polynomial"},
      {"bounds", "lower statistics and closed-form upper bounds over an (m, p) grid"},
      {"shuffle-table", "tabulate the partial Fisher-Yates laws and shuffled lifts"},
      {"estimate-norm", "estimate sup norms of P, its lift and its polarization"},
      {"bourgain", "Monte Carlo chaos integrals and the block lower-bound statistic"},
  };
  for (const auto& [name, help] : subs) add_flags(app.add_subcommand(name, help), flags);

  CLI11_PARSE(app, argc, argv);

  try {
    polarlab::cli::ExperimentConfig raw;
    raw.subcommand = polarlab::cli::parse_subcommand(app.get_subcommands().front()->get_name());
    raw.m = flags.m;
    raw.n = flags.n;
    raw.p = flags.p;
    raw.samples = flags.samples;
    raw.restarts = flags.restarts;
    raw.seed = flags.seed;
    raw.threads = flags.threads;
    raw.format = polarlab::cli::parse_format(flags.format);
    if (!flags.out.empty()) raw.out = flags.out;
    raw.poly = flags.poly;
    raw.timing = flags.timing;

    const polarlab::cli::ResolvedConfig config = polarlab::cli::resolve(raw);
    const polarlab::cli::CommandOutput result = polarlab::cli::run(config);
    polarlab::cli::emit(polarlab::cli::render(result.document, config.format), flags.out);
    return result.exit_code;
  } catch (const polarlab::core::BudgetError& e) {
    std::cerr << "polarlab: budget: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "polarlab: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "polarlab: error: " << e.what() << "\n";
    return 3;
  }
}
