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

#include "planx/planner/validate.hpp"

#include <sstream>

#include "planx/planner/state_ops.hpp"

namespace planx::planner {

std::string ValidationReport::str() const {
  std::ostringstream os;
  if (valid) {
    os << "valid plan, cost " << recomputed_cost;
    return os.str();
  }
  if (failed_step > 0)
    os << "invalid at step " << failed_step << ": " << message;
  else
    os << "goal not satisfied: " << message;
  return os.str();
}

ValidationReport validate_plan(const GroundedTask& task, const Plan& plan) {
  ValidationReport report;
  State state = task.init;
  auto snapshot = [&task](const State& s) {
    std::vector<std::string> names;
    names.reserve(s.size());
    for (int a : s) names.push_back(task.atom_names[a]);
    return names;
  };

  for (size_t i = 0; i < plan.steps.size(); ++i) {
    const GroundedAction& action = plan.steps[i];
    if (!applicable(action, state)) {
      report.failed_step = i + 1;
      std::ostringstream os;
      os << action.str() << " is not applicable:";
      for (int p : action.pre_pos)
        if (!contains(state, p)) os << " missing " << task.atom_names[p];
      for (int p : action.pre_neg)
        if (contains(state, p)) os << " violates (not " << task.atom_names[p] << ")";
      report.message = os.str();
      report.state_at_failure = snapshot(state);
      return report;
    }
    state = apply_effects(action, state);
    report.recomputed_cost += action.cost;
  }

  if (!goal_satisfied(task, state)) {
    std::ostringstream os;
    os << "unmet:";
    for (int g : task.goal_pos)
      if (!contains(state, g)) os << ' ' << task.atom_names[g];
    for (int g : task.goal_neg)
      if (contains(state, g)) os << " (not " << task.atom_names[g] << ")";
    report.message = os.str();
    report.state_at_failure = snapshot(state);
    return report;
  }

  report.valid = true;
  report.goal_satisfied = true;
  return report;
}

}  // namespace planx::planner
