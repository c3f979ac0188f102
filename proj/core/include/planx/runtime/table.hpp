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

#ifndef PLANX_RUNTIME_TABLE_HPP
#define PLANX_RUNTIME_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace planx::runtime {

/// A small column-named table with typed cells (string, integer, double,
/// boolean, null). CSV reads infer cell types; writes are round-trip stable.
struct Table {
  using Cell = nlohmann::ordered_json;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  size_t row_count() const { return rows.size(); }
  std::optional<size_t> column_index(const std::string& name) const;
  std::vector<Cell> column_values(size_t index) const;

  static Table from_csv(const std::string& text);
  std::string to_csv() const;

  /// State representation: {"__kind":"table","columns":[...],"rows":[[...]]}.
  nlohmann::ordered_json to_json() const;
  static std::optional<Table> from_json(const nlohmann::ordered_json& value);
  static bool is_table(const nlohmann::ordered_json& value);

  friend bool operator==(const Table&, const Table&) = default;
};

}  // namespace planx::runtime

#endif  // PLANX_RUNTIME_TABLE_HPP
