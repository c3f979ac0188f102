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

#ifndef PLANX_RUNTIME_FILTER_HPP
#define PLANX_RUNTIME_FILTER_HPP

#include <memory>
#include <string>

#include "planx/diagnostics.hpp"
#include "planx/runtime/table.hpp"

namespace planx::runtime {

/// Pandas-surface query strings, parsed into a tiny filter language and
/// evaluated against Table values. Never executed as host code. Supported:
///   df['col']                                  column projection
///   df[(df["col"] == "v")]                     row filter, ==  !=  >  >=  <  <=
///   df[(df['a'] >= 8) & (df['a'] <= 11)]       conjunction with &
///   df[df['flag'] == True]                     boolean literals
struct FilterQuery {
  struct Comparison {
    std::string column;
    std::string op;
    Table::Cell literal;
  };
  struct Node {
    // Leaf when comparison is set; otherwise a conjunction of children.
    std::optional<Comparison> comparison;
    std::vector<Node> children;
  };

  bool projection = false;
  std::string column;  // projection target
  Node root;           // row filter

  static ParseResult<FilterQuery> parse(const std::string& text);
};

/// Applies the query. Projection keeps one column; a row filter keeps matching
/// rows. Unknown columns or non-comparable cells are diagnostics.
ParseResult<Table> apply_query(const Table& table, const FilterQuery& query);

}  // namespace planx::runtime

#endif  // PLANX_RUNTIME_FILTER_HPP
