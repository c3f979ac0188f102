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

#ifndef PLANX_PLANNER_VALIDATE_HPP
#define PLANX_PLANNER_VALIDATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "planx/planner/search.hpp"

namespace planx::planner {

struct ValidationReport {
  bool valid = false;
  bool goal_satisfied = false;
  std::int64_t recomputed_cost = 0;
  // First violation, when invalid.
  size_t failed_step = 0;  // 1-based; 0 means the goal check failed
  std::string message;
  std::vector<std::string> state_at_failure;

  std::string str() const;
};

/// Step-by-step applicability check, goal check and cost recomputation.
ValidationReport validate_plan(const GroundedTask& task, const Plan& plan);

}  // namespace planx::planner

#endif  // PLANX_PLANNER_VALIDATE_HPP
