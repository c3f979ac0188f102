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

#include "planx/runtime/decision_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace planx::runtime {
namespace {

using Cell = Table::Cell;

// Label histogram over the row subset; insertion order keeps ties stable.
std::vector<std::pair<Cell, size_t>> label_counts(
    const Table& data, size_t target_col, const std::vector<size_t>& rows) {
  std::vector<std::pair<Cell, size_t>> counts;
  for (size_t r : rows) {
    const Cell& label = data.rows[r][target_col];
    auto it = std::find_if(counts.begin(), counts.end(),
                           [&](const auto& p) { return p.first == label; });
    if (it == counts.end())
      counts.push_back({label, 1});
    else
      ++it->second;
  }
  return counts;
}

Cell majority(const Table& data, size_t target_col,
              const std::vector<size_t>& rows) {
  Cell best;
  size_t best_count = 0;
  for (const auto& [label, count] : label_counts(data, target_col, rows)) {
    if (count > best_count) {
      best = label;
      best_count = count;
    }
  }
  return best;
}

double gini(const Table& data, size_t target_col,
            const std::vector<size_t>& rows) {
  if (rows.empty()) return 0.0;
  double impurity = 1.0;
  double n = static_cast<double>(rows.size());
  for (const auto& [label, count] : label_counts(data, target_col, rows)) {
    double p = static_cast<double>(count) / n;
    impurity -= p * p;
  }
  return impurity;
}

bool is_pure(const Table& data, size_t target_col,
             const std::vector<size_t>& rows) {
  for (size_t i = 1; i < rows.size(); ++i)
    if (data.rows[rows[i]][target_col] != data.rows[rows[0]][target_col])
      return false;
  return true;
}

}  // namespace

std::unique_ptr<DecisionTreeClassifier::Node> DecisionTreeClassifier::build(
    const Table& data, const std::vector<size_t>& feature_cols,
    size_t target_col, std::vector<size_t> rows, int depth, int max_depth) {
  auto node = std::make_unique<Node>();
  node->prediction = majority(data, target_col, rows);
  if (rows.size() < 2 || depth >= max_depth || is_pure(data, target_col, rows))
    return node;

  double best_score = gini(data, target_col, rows);
  size_t best_feature = 0;
  bool best_numeric = false;
  Cell best_value;
  bool found = false;

  for (size_t feature : feature_cols) {
    bool numeric = std::all_of(rows.begin(), rows.end(), [&](size_t r) {
      return data.rows[r][feature].is_number();
    });
    std::vector<Cell> candidates;
    if (numeric) {
      std::vector<double> values;
      for (size_t r : rows)
        values.push_back(data.rows[r][feature].get<double>());
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      for (size_t i = 0; i + 1 < values.size(); ++i)
        candidates.push_back((values[i] + values[i + 1]) / 2.0);
    } else {
      for (size_t r : rows) {
        const Cell& v = data.rows[r][feature];
        if (std::find(candidates.begin(), candidates.end(), v) ==
            candidates.end())
          candidates.push_back(v);
      }
    }

    for (const Cell& candidate : candidates) {
      std::vector<size_t> left, right;
      for (size_t r : rows) {
        const Cell& v = data.rows[r][feature];
        bool goes_left = numeric ? v.get<double>() <= candidate.get<double>()
                                 : v == candidate;
        (goes_left ? left : right).push_back(r);
      }
      if (left.empty() || right.empty()) continue;
      double n = static_cast<double>(rows.size());
      double score = (static_cast<double>(left.size()) / n) *
                         gini(data, target_col, left) +
                     (static_cast<double>(right.size()) / n) *
                         gini(data, target_col, right);
      if (score + 1e-12 < best_score) {
        best_score = score;
        best_feature = feature;
        best_numeric = numeric;
        best_value = candidate;
        found = true;
      }
    }
  }

  if (!found) return node;

  std::vector<size_t> left_rows, right_rows;
  for (size_t r : rows) {
    const Cell& v = data.rows[r][best_feature];
    bool goes_left = best_numeric
                         ? v.get<double>() <= best_value.get<double>()
                         : v == best_value;
    (goes_left ? left_rows : right_rows).push_back(r);
  }
  node->leaf = false;
  node->feature = data.columns[best_feature];
  node->numeric = best_numeric;
  node->split_value = best_value;
  node->left = build(data, feature_cols, target_col, std::move(left_rows),
                     depth + 1, max_depth);
  node->right = build(data, feature_cols, target_col, std::move(right_rows),
                      depth + 1, max_depth);
  return node;
}

DecisionTreeClassifier DecisionTreeClassifier::train(
    const Table& data, const std::string& target_column, int max_depth) {
  auto target = data.column_index(target_column);
  if (!target)
    throw std::runtime_error("no such target column: " + target_column);
  if (data.rows.empty())
    throw std::runtime_error("cannot train on an empty table");

  DecisionTreeClassifier tree;
  tree.target_ = target_column;
  std::vector<size_t> feature_cols;
  for (size_t i = 0; i < data.columns.size(); ++i) {
    if (i == *target) continue;
    feature_cols.push_back(i);
    tree.features_.push_back(data.columns[i]);
  }
  std::vector<size_t> rows(data.rows.size());
  for (size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  tree.root_ = build(data, feature_cols, *target, std::move(rows), 0,
                     max_depth);
  return tree;
}

Table::Cell DecisionTreeClassifier::predict_row(const Table& table,
                                                size_t row) const {
  const Node* node = root_.get();
  while (!node->leaf) {
    auto col = table.column_index(node->feature);
    Cell v;
    if (col && *col < table.rows[row].size()) v = table.rows[row][*col];
    bool goes_left;
    if (node->numeric)
      goes_left =
          v.is_number() && v.get<double>() <= node->split_value.get<double>();
    else
      goes_left = v == node->split_value;
    node = goes_left ? node->left.get() : node->right.get();
  }
  return node->prediction;
}

Table DecisionTreeClassifier::predict_table(const Table& input) const {
  Table out = input;
  auto target = out.column_index(target_);
  if (!target) {
    out.columns.push_back(target_);
    target = out.columns.size() - 1;
    for (auto& row : out.rows) row.resize(out.columns.size());
  }
  for (size_t r = 0; r < out.rows.size(); ++r)
    out.rows[r][*target] = predict_row(input, r);
  return out;
}

nlohmann::ordered_json DecisionTreeClassifier::node_to_json(const Node& node) {
  nlohmann::ordered_json out;
  if (node.leaf) {
    out["leaf"] = true;
    out["prediction"] = node.prediction;
    return out;
  }
  out["leaf"] = false;
  out["feature"] = node.feature;
  out["numeric"] = node.numeric;
  out["split"] = node.split_value;
  out["left"] = node_to_json(*node.left);
  out["right"] = node_to_json(*node.right);
  return out;
}

std::unique_ptr<DecisionTreeClassifier::Node>
DecisionTreeClassifier::node_from_json(const nlohmann::ordered_json& value) {
  auto node = std::make_unique<Node>();
  if (value.value("leaf", true)) {
    if (value.contains("prediction")) node->prediction = value["prediction"];
    return node;
  }
  node->leaf = false;
  node->feature = value["feature"].get<std::string>();
  node->numeric = value["numeric"].get<bool>();
  node->split_value = value["split"];
  node->left = node_from_json(value["left"]);
  node->right = node_from_json(value["right"]);
  return node;
}

nlohmann::ordered_json DecisionTreeClassifier::to_json() const {
  nlohmann::ordered_json out;
  out["__kind"] = "model";
  out["algorithm"] = "decision-tree-classifier";
  out["target"] = target_;
  out["features"] = features_;
  out["tree"] = node_to_json(*root_);
  return out;
}

DecisionTreeClassifier DecisionTreeClassifier::from_json(
    const nlohmann::ordered_json& value) {
  DecisionTreeClassifier tree;
  tree.target_ = value["target"].get<std::string>();
  for (const auto& f : value["features"])
    tree.features_.push_back(f.get<std::string>());
  tree.root_ = node_from_json(value["tree"]);
  return tree;
}

}  // namespace planx::runtime
