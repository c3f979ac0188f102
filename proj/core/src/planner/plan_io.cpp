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

#include "planx/planner/plan_io.hpp"

#include <sstream>

#include "planx/pddl/model.hpp"

namespace planx::planner {

std::string render_plan(const Plan& plan) {
  std::ostringstream os;
  for (const GroundedAction& step : plan.steps) os << step.str() << '\n';
  os << "; cost = " << plan.total_cost << '\n';
  return os.str();
}

ParseResult<Plan> parse_plan(std::string_view text, const GroundedTask& task) {
  ParseResult<Plan> result;
  Plan plan;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == ';') continue;
    size_t open = line.find('(', start);
    size_t close = line.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close <= open) {
      result.diagnostics.push_back(
          {"", line_no, 1, "expected '(name args...)' on plan line"});
      continue;
    }
    std::istringstream words(
        pddl::to_lower(line.substr(open + 1, close - open - 1)));
    std::string name;
    words >> name;
    std::vector<std::string> args;
    std::string w;
    while (words >> w) args.push_back(w);

    const GroundedAction* found = nullptr;
    for (const GroundedAction& action : task.actions) {
      if (action.schema == name && action.args == args) {
        found = &action;
        break;
      }
    }
    if (found == nullptr) {
      result.diagnostics.push_back(
          {"", line_no, 1,
           "no grounded action matches '(" + name + " ...)' on this task"});
      continue;
    }
    plan.steps.push_back(*found);
    plan.total_cost += found->cost;
  }
  if (!result.diagnostics.empty()) return result;
  result.value = std::move(plan);
  return result;
}

}  // namespace planx::planner
