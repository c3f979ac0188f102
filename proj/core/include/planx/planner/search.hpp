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

#ifndef PLANX_PLANNER_SEARCH_HPP
#define PLANX_PLANNER_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "planx/planner/grounding.hpp"

namespace planx::planner {

struct Plan {
  std::vector<GroundedAction> steps;
  std::int64_t total_cost = 0;
};

enum class PlanStatus { Solved, Unsolvable, LimitExceeded };

struct PlanOptions {
  std::int64_t node_cap = 2'000'000;  // expanded-node limit
  // Admissible h^max heuristic on top of the uniform-cost baseline. Both
  // settings return provably minimum-cost plans.
  bool use_hmax = false;
};

struct PlanResult {
  PlanStatus status = PlanStatus::Unsolvable;
  Plan plan;
  std::int64_t expanded = 0;
};

/// Cost-optimal forward search. Tie-breaking is stable (insertion order), so
/// the returned plan is reproducible byte-for-byte across runs.
PlanResult plan(const GroundedTask& task, const PlanOptions& options = {});

}  // namespace planx::planner

#endif  // PLANX_PLANNER_SEARCH_HPP
