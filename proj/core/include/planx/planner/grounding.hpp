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

#ifndef PLANX_PLANNER_GROUNDING_HPP
#define PLANX_PLANNER_GROUNDING_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "planx/pddl/model.hpp"

namespace planx::planner {

/// One instantiated action. Cost is fully evaluated at grounding time; cost
/// fluents are static (set in the initial state, never modified by effects)
/// and default to 1 when the problem assigns no value.
struct GroundedAction {
  std::string schema;
  std::vector<std::string> args;
  std::int64_t cost = 0;
  std::vector<int> pre_pos;
  std::vector<int> pre_neg;
  std::vector<int> add;
  std::vector<int> del;

  std::string str() const;  // "(schema arg1 arg2 ...)"
};

struct GroundedTask {
  std::vector<std::string> atom_names;  // id -> printable atom
  std::unordered_map<std::string, int> atom_ids;
  std::vector<int> init;      // sorted, unique
  std::vector<int> goal_pos;  // sorted
  std::vector<int> goal_neg;  // sorted
  std::vector<GroundedAction> actions;
  // Set when a positive goal atom is outside the reachable universe.
  bool trivially_unsolvable = false;

  int atom_id(const std::string& name) const {
    auto it = atom_ids.find(name);
    return it == atom_ids.end() ? -1 : it->second;
  }
};

/// Exhaustive typed instantiation followed by a delete-relaxed reachability
/// fixpoint; only actions whose positive preconditions are relaxed-reachable
/// are kept. Action order is deterministic: schema declaration order, then
/// lexicographic binding order over the problem's object declaration order.
GroundedTask ground(const pddl::Domain& domain, const pddl::Problem& problem);

}  // namespace planx::planner

#endif  // PLANX_PLANNER_GROUNDING_HPP
