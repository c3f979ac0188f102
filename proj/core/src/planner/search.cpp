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

#include "planx/planner/search.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_map>

#include "planx/planner/state_ops.hpp"

namespace planx::planner {
namespace {

// h^max: cost of the most expensive goal atom under delete relaxation.
// Admissible, so A* with it stays optimal.
std::int64_t hmax(const GroundedTask& task, const State& state) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> atom_cost(task.atom_names.size(), kInf);
  for (int a : state) atom_cost[a] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const GroundedAction& action : task.actions) {
      std::int64_t pre = 0;
      for (int p : action.pre_pos) pre = std::max(pre, atom_cost[p]);
      if (pre >= kInf) continue;
      std::int64_t through = pre + action.cost;
      for (int a : action.add) {
        if (through < atom_cost[a]) {
          atom_cost[a] = through;
          changed = true;
        }
      }
    }
  }
  std::int64_t h = 0;
  for (int g : task.goal_pos) h = std::max(h, atom_cost[g]);
  return h >= kInf ? -1 : h;  // -1: some goal atom is relaxed-unreachable
}

struct Node {
  State state;
  std::int64_t g = 0;
  std::int64_t parent = -1;
  int action = -1;
};

struct QueueEntry {
  std::int64_t f;
  std::int64_t tie;  // insertion index: lower pops first among equal f
  std::int64_t node;

  bool operator>(const QueueEntry& o) const {
    if (f != o.f) return f > o.f;
    return tie > o.tie;
  }
};

}  // namespace

PlanResult plan(const GroundedTask& task, const PlanOptions& options) {
  PlanResult result;
  if (task.trivially_unsolvable) return result;

  State init = task.init;
  if (goal_satisfied(task, init)) {
    result.status = PlanStatus::Solved;
    return result;  // empty plan, cost 0
  }

  std::vector<Node> nodes;
  nodes.push_back({init, 0, -1, -1});
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> open;
  std::unordered_map<State, std::int64_t, StateHash> best_g;
  best_g.emplace(init, 0);

  std::int64_t tie = 0;
  auto push = [&](std::int64_t node_idx) {
    const Node& n = nodes[node_idx];
    std::int64_t h = 0;
    if (options.use_hmax) {
      h = hmax(task, n.state);
      if (h < 0) return;  // dead end under relaxation
    }
    open.push({n.g + h, tie++, node_idx});
  };
  push(0);

  while (!open.empty()) {
    QueueEntry entry = open.top();
    open.pop();
    const std::int64_t node_idx = entry.node;
    const std::int64_t g = nodes[node_idx].g;
    {
      auto it = best_g.find(nodes[node_idx].state);
      if (it != best_g.end() && it->second < g) continue;  // stale entry
    }

    if (goal_satisfied(task, nodes[node_idx].state)) {
      result.status = PlanStatus::Solved;
      std::vector<int> actions;
      for (std::int64_t n = node_idx; nodes[n].parent >= 0; n = nodes[n].parent)
        actions.push_back(nodes[n].action);
      std::reverse(actions.begin(), actions.end());
      for (int a : actions) {
        result.plan.steps.push_back(task.actions[a]);
        result.plan.total_cost += task.actions[a].cost;
      }
      return result;
    }

    if (++result.expanded > options.node_cap) {
      result.status = PlanStatus::LimitExceeded;
      return result;
    }

    for (size_t ai = 0; ai < task.actions.size(); ++ai) {
      const GroundedAction& action = task.actions[ai];
      if (!applicable(action, nodes[node_idx].state)) continue;
      State next = apply_effects(action, nodes[node_idx].state);
      std::int64_t ng = g + action.cost;
      auto it = best_g.find(next);
      if (it != best_g.end() && it->second <= ng) continue;
      if (it == best_g.end())
        best_g.emplace(next, ng);
      else
        it->second = ng;
      nodes.push_back({std::move(next), ng, node_idx, static_cast<int>(ai)});
      push(static_cast<std::int64_t>(nodes.size()) - 1);
    }
  }

  result.status = PlanStatus::Unsolvable;
  return result;
}

}  // namespace planx::planner
