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

#include "planx/planner/brute_force.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "planx/planner/state_ops.hpp"

namespace planx::planner {

// Deliberately a different algorithm from plan(): a bucket-per-cost sweep
// (Dial-style) without heap, heuristic or tie counters. States are settled in
// nondecreasing cost order, so the first goal state popped is optimal.
BruteForceResult brute_force_plan(const GroundedTask& task,
                                  std::int64_t max_cost) {
  BruteForceResult result;
  if (task.trivially_unsolvable) {
    result.status = BruteForceStatus::Unsolvable;
    return result;
  }

  struct Node {
    State state;
    std::int64_t g;
    std::int64_t parent;
    int action;
  };
  std::vector<Node> nodes;
  nodes.push_back({task.init, 0, -1, -1});

  std::vector<std::deque<std::int64_t>> buckets(
      static_cast<size_t>(max_cost) + 1);
  buckets[0].push_back(0);
  std::unordered_map<State, std::int64_t, StateHash> seen_g;
  seen_g.emplace(task.init, 0);
  bool cut_off = false;

  for (std::int64_t g = 0; g <= max_cost; ++g) {
    auto& bucket = buckets[static_cast<size_t>(g)];
    while (!bucket.empty()) {
      std::int64_t node_idx = bucket.front();
      bucket.pop_front();
      {
        // Skip entries superseded by a cheaper path to the same state.
        auto it = seen_g.find(nodes[node_idx].state);
        if (it != seen_g.end() && it->second < g) continue;
      }

      if (goal_satisfied(task, nodes[node_idx].state)) {
        result.status = BruteForceStatus::Solved;
        std::vector<int> actions;
        for (std::int64_t n = node_idx; nodes[n].parent >= 0;
             n = nodes[n].parent)
          actions.push_back(nodes[n].action);
        std::reverse(actions.begin(), actions.end());
        for (int a : actions) {
          result.plan.steps.push_back(task.actions[a]);
          result.plan.total_cost += task.actions[a].cost;
        }
        return result;
      }

      for (size_t ai = 0; ai < task.actions.size(); ++ai) {
        const GroundedAction& action = task.actions[ai];
        if (!applicable(action, nodes[node_idx].state)) continue;
        std::int64_t ng = g + action.cost;
        if (ng > max_cost) {
          cut_off = true;
          continue;
        }
        State next = apply_effects(action, nodes[node_idx].state);
        auto it = seen_g.find(next);
        if (it != seen_g.end() && it->second <= ng) continue;
        if (it == seen_g.end())
          seen_g.emplace(next, ng);
        else
          it->second = ng;
        nodes.push_back({std::move(next), ng, node_idx, static_cast<int>(ai)});
        buckets[static_cast<size_t>(ng)].push_back(
            static_cast<std::int64_t>(nodes.size()) - 1);
      }
    }
  }

  result.status = cut_off ? BruteForceStatus::CostBoundExceeded
                          : BruteForceStatus::Unsolvable;
  return result;
}

}  // namespace planx::planner
