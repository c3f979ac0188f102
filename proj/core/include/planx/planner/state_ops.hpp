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

#ifndef PLANX_PLANNER_STATE_OPS_HPP
#define PLANX_PLANNER_STATE_OPS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "planx/planner/grounding.hpp"

namespace planx::planner {

/// A state is the sorted set of true atom ids.
using State = std::vector<int>;

struct StateHash {
  size_t operator()(const State& s) const {
    // FNV-1a over the atom ids.
    std::uint64_t h = 1469598103934665603ull;
    for (int a : s) {
      h ^= static_cast<std::uint64_t>(a) + 1;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

inline bool contains(const State& s, int atom) {
  return std::binary_search(s.begin(), s.end(), atom);
}

inline bool applicable(const GroundedAction& action, const State& s) {
  for (int p : action.pre_pos)
    if (!contains(s, p)) return false;
  for (int p : action.pre_neg)
    if (contains(s, p)) return false;
  return true;
}

/// Applies delete-then-add (adds win for atoms in both sets).
inline State apply_effects(const GroundedAction& action, const State& s) {
  State next;
  next.reserve(s.size() + action.add.size());
  std::set_difference(s.begin(), s.end(), action.del.begin(), action.del.end(),
                      std::back_inserter(next));
  State out;
  out.reserve(next.size() + action.add.size());
  std::set_union(next.begin(), next.end(), action.add.begin(),
                 action.add.end(), std::back_inserter(out));
  return out;
}

inline bool goal_satisfied(const GroundedTask& task, const State& s) {
  for (int g : task.goal_pos)
    if (!contains(s, g)) return false;
  for (int g : task.goal_neg)
    if (contains(s, g)) return false;
  return true;
}

}  // namespace planx::planner

#endif  // PLANX_PLANNER_STATE_OPS_HPP
