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

#include "planx/compiler/compiler.hpp"

#include <unordered_set>

namespace planx::compiler {

ParseResult<pddl::Problem> compile_problem(const intent::TaskDictionary& task,
                                           const pddl::Domain& domain,
                                           const std::string& name) {
  ParseResult<pddl::Problem> result;
  pddl::Problem problem;
  problem.name = name;
  problem.domain_name = domain.name;

  std::unordered_set<std::string> taken;
  for (const pddl::TypedName& c : domain.constants) taken.insert(c.name);
  bool have_agent = false;
  for (const auto& [key, record] : task.entities) {
    if (!taken.insert(key).second) {
      result.diagnostics.push_back(
          {"", 0, 0, "duplicate object name '" + key + "'"});
      continue;
    }
    problem.objects.push_back({key, record.type});
    if (domain.is_subtype(record.type, "agent")) have_agent = true;
  }
  for (const pddl::TypedName& c : domain.constants)
    if (domain.is_subtype(c.type, "agent")) have_agent = true;

  bool needs_agent = false;
  for (const pddl::ActionSchema& action : domain.actions)
    for (const pddl::TypedName& param : action.params)
      if (domain.is_subtype(param.type, "agent") ||
          param.type == "agent")
        needs_agent = true;
  if (needs_agent && !have_agent) {
    if (taken.count(kImplicitAgent)) {
      result.diagnostics.push_back(
          {"", 0, 0,
           std::string("cannot synthesize agent: name '") + kImplicitAgent +
               "' is already bound to a non-agent entity"});
    } else {
      problem.objects.push_back({kImplicitAgent, "ai-agent"});
    }
  }

  problem.init.reserve(task.init_literals.size());
  for (const pddl::Literal& lit : task.init_literals) {
    // init_state is validated to be negation-free.
    problem.init.push_back(lit.atom);
  }
  problem.init_fluents = task.init_fluents;
  problem.goal = task.goal_literals;

  if (domain.has_positive_costs()) {
    bool has_total_cost = false;
    for (const pddl::FluentAssignment& fa : problem.init_fluents)
      if (fa.fluent == "total-cost") has_total_cost = true;
    if (!has_total_cost)
      problem.init_fluents.push_back({"total-cost", {}, 0});
    problem.minimize_total_cost = true;
  }

  if (!result.diagnostics.empty()) return result;
  result.value = std::move(problem);
  return result;
}

}  // namespace planx::compiler
