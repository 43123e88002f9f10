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

#include "polarlab/cli/output.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace polarlab::cli {

using nlohmann::ordered_json;

namespace {

std::string cell(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ' ';
      s += cell(e);
    }
    return s;
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct Record {
  std::size_t result = 0;
  std::string kind;
  std::string type;
  const ordered_json* fields = nullptr;
  std::string passed;
};

std::vector<Record> collect(const ordered_json& doc) {
  std::vector<Record> out;
  const auto& results = doc.at("results");
  for (std::size_t r = 0; r < results.size(); ++r) {
    const auto& res = results[r];
    const std::string kind = res.at("kind").get<std::string>();
    out.push_back({r, kind, "summary", &res.at("summary"), cell(res.at("passed"))});
    if (res.contains("rows")) {
      for (const auto& row : res.at("rows")) out.push_back({r, kind, "row", &row, ""});
    }
  }
  return out;
}

std::string render_csv(const ordered_json& doc) {
  const std::vector<Record> records = collect(doc);
  std::vector<std::string> columns;
  for (const auto& rec : records) {
    for (const auto& [k, v] : rec.fields->items()) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
  }
  std::ostringstream os;
  os << "result,kind,record,passed";
  for (const auto& c : columns) os << ',' << csv_escape(c);
  os << '\n';
  for (const auto& rec : records) {
    os << rec.result << ',' << csv_escape(rec.kind) << ',' << rec.type << ',' << rec.passed;
    for (const auto& c : columns) {
      os << ',';
      if (rec.fields->contains(c)) os << csv_escape(cell(rec.fields->at(c)));
    }
    os << '\n';
  }
  return os.str();
}

void render_rows(std::ostringstream& os, const ordered_json& rows) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [k, v] : row.items()) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const auto& row : rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < columns.size(); ++i) {
      line.push_back(row.contains(columns[i]) ? cell(row.at(columns[i])) : "");
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto put = [&](const std::vector<std::string>& line) {
    std::string text = "   ";
    for (std::size_t i = 0; i < line.size(); ++i) text += ' ' + line[i] + std::string(width[i] - line[i].size(), ' ');
    text.erase(text.find_last_not_of(' ') + 1);
    os << text << '\n';
  };
  put(columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  put(rule);
  for (const auto& line : cells) put(line);
}

std::string render_table(const ordered_json& doc) {
  std::ostringstream os;
  const auto& cfg = doc.at("config_echo");
  os << "polarlab " << cell(cfg.at("subcommand")) << "  (" << cell(doc.at("schema_version")) << ", seed "
     << cell(cfg.at("seed")) << ")\n";
  const auto& results = doc.at("results");
  for (std::size_t r = 0; r < results.size(); ++r) {
    const auto& res = results[r];
    os << "\n[" << r << "] " << cell(res.at("kind"));
    if (!res.at("passed").is_null()) os << "  " << (res.at("passed").get<bool>() ? "PASS" : "FAIL");
    os << "\n    " << cell(res.at("reference")) << '\n';
    std::size_t key_width = 0;
    for (const auto& [k, v] : res.at("summary").items()) key_width = std::max(key_width, k.size());
    for (const auto& [k, v] : res.at("summary").items()) {
      os << "    " << k << std::string(key_width - k.size(), ' ') << "  " << cell(v) << '\n';
    }
    if (res.contains("rows") && !res.at("rows").empty()) render_rows(os, res.at("rows"));
  }
  return os.str();
}

}  // namespace

std::string render(const ordered_json& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return doc.dump(2) + "\n";
    case OutputFormat::csv: return render_csv(doc);
    case OutputFormat::table: return render_table(doc);
  }
  return {};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace polarlab::cli
