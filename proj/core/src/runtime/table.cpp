// Copyright 2026 The plan-x Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planx/runtime/table.hpp"

#include <charconv>
#include <sstream>

namespace planx::runtime {
namespace {

Table::Cell infer_cell(const std::string& field, bool was_quoted) {
  if (was_quoted) return field;
  if (field.empty()) return "";
  if (field == "true" || field == "True" || field == "TRUE") return true;
  if (field == "false" || field == "False" || field == "FALSE") return false;
  {
    std::int64_t n = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), n);
    if (ec == std::errc() && ptr == field.data() + field.size()) return n;
  }
  {
    try {
      size_t used = 0;
      double d = std::stod(field, &used);
      if (used == field.size()) return d;
    } catch (const std::exception&) {
    }
  }
  return field;
}

std::string render_cell(const Table::Cell& cell) {
  if (cell.is_string()) {
    std::string s = cell.get<std::string>();
    bool needs_quotes = s.find_first_of(",\"\n\r") != std::string::npos;
    // Quote strings that would otherwise be re-read as numbers or booleans.
    if (!needs_quotes && !s.empty() && !infer_cell(s, false).is_string())
      needs_quotes = true;
    if (!needs_quotes) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += "\"\"";
      else quoted.push_back(c);
    }
    quoted += '"';
    return quoted;
  }
  if (cell.is_null()) return "";
  return cell.dump();
}

}  // namespace

std::optional<size_t> Table::column_index(const std::string& name) const {
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  return std::nullopt;
}

std::vector<Table::Cell> Table::column_values(size_t index) const {
  std::vector<Cell> out;
  out.reserve(rows.size());
  for (const auto& row : rows)
    out.push_back(index < row.size() ? row[index] : Cell{});
  return out;
}

Table Table::from_csv(const std::string& text) {
  Table table;
  std::vector<std::vector<Cell>> records;
  std::vector<Cell> record;
  std::string field;
  bool in_quotes = false;
  bool quoted_field = false;
  bool any_char = false;

  auto end_field = [&] {
    record.push_back(infer_cell(field, quoted_field));
    field.clear();
    quoted_field = false;
  };
  auto end_record = [&] {
    if (!record.empty() || any_char) {
      end_field();
      records.push_back(std::move(record));
      record.clear();
    }
    any_char = false;
  };

  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        quoted_field = true;
        any_char = true;
        break;
      case ',':
        any_char = true;
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        break;
      default:
        any_char = true;
        field.push_back(c);
    }
  }
  end_record();

  if (records.empty()) return table;
  for (const Cell& c : records[0])
    table.columns.push_back(c.is_string() ? c.get<std::string>() : c.dump());
  for (size_t r = 1; r < records.size(); ++r) {
    records[r].resize(table.columns.size());
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

std::string Table::to_csv() const {
  std::ostringstream os;
  for (size_t i = 0; i < columns.size(); ++i)
    os << (i ? "," : "") << render_cell(Cell(columns[i]));
  os << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < columns.size(); ++i)
      os << (i ? "," : "") << (i < row.size() ? render_cell(row[i]) : "");
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json Table::to_json() const {
  nlohmann::ordered_json out;
  out["__kind"] = "table";
  out["columns"] = columns;
  nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json json_row = nlohmann::ordered_json::array();
    for (const Cell& c : row) json_row.push_back(c);
    json_rows.push_back(std::move(json_row));
  }
  out["rows"] = std::move(json_rows);
  return out;
}

bool Table::is_table(const nlohmann::ordered_json& value) {
  return value.is_object() && value.value("__kind", "") == "table" &&
         value.contains("columns") && value.contains("rows");
}

std::optional<Table> Table::from_json(const nlohmann::ordered_json& value) {
  if (!is_table(value)) return std::nullopt;
  Table table;
  for (const auto& c : value["columns"])
    table.columns.push_back(c.get<std::string>());
  for (const auto& row : value["rows"]) {
    std::vector<Cell> cells;
    for (const auto& c : row) cells.push_back(c);
    cells.resize(table.columns.size());
    table.rows.push_back(std::move(cells));
  }
  return table;
}

}  // namespace planx::runtime
