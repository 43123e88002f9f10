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

#include <json.hpp>

#include "polarlab/cli/config.hpp"
#include "polarlab/shuffle/recursion.hpp"

namespace polarlab::cli {

/// Injection points for mutation testing of the verify suite.
struct RunHooks {
  shuffle::WeightFactory recursion_weight = shuffle::mask_R;
};

struct CommandOutput {
  nlohmann::ordered_json document;  ///< {schema_version, config_echo, results[], timing}
  int exit_code = 0;                ///< 0 iff no result reports passed == false
};

// Each result object carries:
//   kind       short identifier
//   reference  the identity or inequality being exercised, as a formula
//   passed     true / false, or null for pure measurements
//   summary    flat record of scalars
//   rows       optional list of flat records
//   details    optional nested data (witnesses, counterexamples)

[[nodiscard]] nlohmann::ordered_json run_verify(const ResolvedConfig& c, const RunHooks& hooks = {});
[[nodiscard]] nlohmann::ordered_json run_bounds(const ResolvedConfig& c);
[[nodiscard]] nlohmann::ordered_json run_shuffle_table(const ResolvedConfig& c);
[[nodiscard]] nlohmann::ordered_json run_estimate_norm(const ResolvedConfig& c);
[[nodiscard]] nlohmann::ordered_json run_bourgain(const ResolvedConfig& c);

/// Dispatches on c.subcommand and wraps the results. Wall-clock time is only
/// recorded when c.timing is set, so default output is reproducible.
[[nodiscard]] CommandOutput run(const ResolvedConfig& c, const RunHooks& hooks = {});

}  // namespace polarlab::cli
