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

#include <string>

#include <json.hpp>

#include "polarlab/cli/config.hpp"

namespace polarlab::cli {

/// Renders a report document. json is the full document; csv and table show
/// each result's summary record and rows, with nested details omitted.
[[nodiscard]] std::string render(const nlohmann::ordered_json& doc, OutputFormat format);

/// Writes to `path`, or to stdout when path is empty.
void emit(const std::string& text, const std::string& path);

}  // namespace polarlab::cli
