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

#ifndef PLANX_RUNTIME_DECISION_TREE_HPP
#define PLANX_RUNTIME_DECISION_TREE_HPP

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "planx/runtime/table.hpp"

namespace planx::runtime {

/// Greedy classification tree: Gini impurity, exact threshold splits on
/// numeric features (midpoints of consecutive distinct values) and equality
/// splits on categorical ones, no pruning. Deterministic: features are
/// scanned in column order and only strictly better splits win.
class DecisionTreeClassifier {
 public:
  static constexpr int kDefaultMaxDepth = 8;

  static DecisionTreeClassifier train(const Table& data,
                                      const std::string& target_column,
                                      int max_depth = kDefaultMaxDepth);

  Table::Cell predict_row(const Table& table, size_t row) const;
  /// Returns the input table with the target column appended (or replaced)
  /// by predictions.
  Table predict_table(const Table& input) const;

  const std::vector<std::string>& features() const { return features_; }
  const std::string& target() const { return target_; }

  nlohmann::ordered_json to_json() const;
  static DecisionTreeClassifier from_json(const nlohmann::ordered_json& value);

 private:
  struct Node {
    bool leaf = true;
    Table::Cell prediction;
    // Split: numeric "<= split_value" or categorical "== split_value";
    // a match descends left.
    std::string feature;
    bool numeric = false;
    Table::Cell split_value;
    std::unique_ptr<Node> left;
    std::unique_ptr<Node> right;
  };

  static std::unique_ptr<Node> build(const Table& data,
                                     const std::vector<size_t>& feature_cols,
                                     size_t target_col,
                                     std::vector<size_t> rows, int depth,
                                     int max_depth);
  static nlohmann::ordered_json node_to_json(const Node& node);
  static std::unique_ptr<Node> node_from_json(
      const nlohmann::ordered_json& value);

  std::string target_;
  std::vector<std::string> features_;
  std::unique_ptr<Node> root_;
};

}  // namespace planx::runtime

#endif  // PLANX_RUNTIME_DECISION_TREE_HPP
