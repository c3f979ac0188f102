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

#ifndef PLANX_PLANNER_BRUTE_FORCE_HPP
#define PLANX_PLANNER_BRUTE_FORCE_HPP

#include <cstdint>

#include "planx/planner/search.hpp"

namespace planx::planner {

enum class BruteForceStatus { Solved, Unsolvable, CostBoundExceeded };

struct BruteForceResult {
  BruteForceStatus status = BruteForceStatus::Unsolvable;
  Plan plan;
};

/// Test oracle: exhaustive uniform-cost enumeration of the state space up to
/// max_cost, using cost-bucket sweeps instead of the planner's priority queue
/// and heuristics. Intended for small tasks (a few thousand grounded actions).
/// Returns CostBoundExceeded when states beyond the bound were cut off and no
/// plan within the bound exists, so Unsolvable is only reported when proven.
BruteForceResult brute_force_plan(const GroundedTask& task,
                                  std::int64_t max_cost);

}  // namespace planx::planner

#endif  // PLANX_PLANNER_BRUTE_FORCE_HPP
