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

#include "planx/runtime/execution.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>
#include <unordered_map>

#include "planx/pddl/parser.hpp"
#include "planx/pddl/printer.hpp"
#include "planx/planner/grounding.hpp"
#include "planx/planner/plan_io.hpp"

namespace planx::runtime {

bool ExecutionState::has(const std::string& name) const {
  return index_.count(name) > 0;
}

Record& ExecutionState::at(const std::string& name) {
  auto it = index_.find(name);
  if (it == index_.end())
    throw ExecutionError("no execution-state entry for '" + name + "'");
  return entries_[it->second].second;
}

const Record& ExecutionState::at(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw ExecutionError("no execution-state entry for '" + name + "'");
  return entries_[it->second].second;
}

void ExecutionState::put(const std::string& name, Record record) {
  auto it = index_.find(name);
  if (it != index_.end()) {
    entries_[it->second].second = std::move(record);
    return;
  }
  index_.emplace(name, entries_.size());
  entries_.push_back({name, std::move(record)});
}

json ExecutionState::to_json() const {
  json out = json::object();
  for (const auto& [name, record] : entries_) {
    json entry = json::object();
    entry["type"] = record.type;
    entry["value"] = record.value;
    if (record.extras.is_object() && !record.extras.empty())
      entry["extras"] = record.extras;
    out[name] = std::move(entry);
  }
  if (!new_goals.empty()) out["new_goals"] = new_goals;
  return out;
}

ExecutionState ExecutionState::seed(const intent::TaskDictionary& task,
                                    const pddl::Problem& problem) {
  ExecutionState state;
  for (const auto& [key, record] : task.entities)
    state.put(key, {record.type, record.value, record.extras});
  for (const pddl::TypedName& obj : problem.objects)
    if (!state.has(obj.name)) state.put(obj.name, {obj.type, nullptr, {}});
  return state;
}

void ExecutorRegistry::add(const std::string& action, Executor executor) {
  executors_[action] = std::move(executor);
}

const Executor* ExecutorRegistry::find(const std::string& action) const {
  auto it = executors_.find(action);
  return it == executors_.end() ? nullptr : &it->second;
}

std::vector<std::string> ExecutorRegistry::action_names() const {
  std::vector<std::string> names;
  names.reserve(executors_.size());
  for (const auto& [name, executor] : executors_) names.push_back(name);
  return names;
}

json ExecutionReport::to_json() const {
  json out;
  json steps_json = json::array();
  for (const StepOutcome& step : steps) {
    json s;
    s["action"] = step.action.str();
    s["applied"] = step.applied;
    s["monitor"] = step.monitor_ok;
    if (!step.failure.empty()) s["failure"] = step.failure;
    steps_json.push_back(std::move(s));
  }
  out["steps"] = std::move(steps_json);
  json replans_json = json::array();
  for (const ReplanEvent& replan : replans) {
    json r;
    r["trigger"] = replan.trigger;
    r["problem"] = replan.problem;
    r["plan"] = replan.plan;
    replans_json.push_back(std::move(r));
  }
  out["replans"] = std::move(replans_json);
  out["status"] = status == FinalStatus::Success
                      ? "success"
                      : (status == FinalStatus::Failed ? "failed" : "aborted");
  if (!abort_reason.empty()) out["abort-reason"] = abort_reason;
  out["artifacts"] = artifacts;
  out["sent-responses"] = sent_responses;
  if (!response.empty()) out["response"] = response;
  return out;
}

bool same_outcome(const ExecutionReport& a, const ExecutionReport& b) {
  return a.to_json() == b.to_json();
}

void apply_action(const planner::GroundedAction& action, ExecutionState& state,
                  OfficeWorld& world, const ExecutorRegistry& registry,
                  ExecContext& context) {
  const Executor* executor = registry.find(action.schema);
  if (executor == nullptr)
    throw ExecutionError("no executor registered for action '" +
                         action.schema + "'");
  context.world = &world;
  executor->apply(action.args, state, context);
}

bool check_success(const planner::GroundedAction& action,
                   const ExecutionState& state, const OfficeWorld& world,
                   const ExecutorRegistry& registry) {
  const Executor* executor = registry.find(action.schema);
  if (executor == nullptr) return false;
  try {
    return executor->succeeded(action.args, state, world);
  } catch (const std::exception&) {
    return false;
  }
}

ExecutionReport execute_plan(const planner::Plan& plan, ExecutionState& state,
                             OfficeWorld& world,
                             const ExecutorRegistry& registry,
                             const ReplanPolicy& policy,
                             const pddl::Domain& domain,
                             const pddl::Problem& problem,
                             prompt::CompletionBackend* backend) {
  ExecutionReport report;
  ExecContext context;
  context.world = &world;
  context.backend = backend;
  context.artifacts = &report.artifacts;

  // Tracked symbolic state, advanced by PDDL effects on monitored success.
  std::set<std::string> symbolic;
  std::map<std::string, pddl::Atom> atom_by_name;
  for (const pddl::Atom& atom : problem.init) {
    symbolic.insert(atom.str());
    atom_by_name[atom.str()] = atom;
  }
  std::vector<pddl::Literal> goals = problem.goal;

  std::deque<planner::GroundedAction> queue(plan.steps.begin(),
                                            plan.steps.end());
  std::set<std::string> failed_once;
  int budget = policy.budget;

  auto goals_hold = [&]() {
    for (const pddl::Literal& goal : goals) {
      bool holds = symbolic.count(goal.atom.str()) > 0;
      if (goal.negated ? holds : !holds) return false;
    }
    return true;
  };

  auto build_problem = [&]() {
    pddl::Problem fresh;
    fresh.name = problem.name + "-replan";
    fresh.domain_name = problem.domain_name;
    fresh.objects = problem.objects;
    for (const std::string& name : symbolic)
      fresh.init.push_back(atom_by_name.at(name));
    for (const pddl::FluentAssignment& fa : problem.init_fluents)
      if (fa.fluent != "total-cost") fresh.init_fluents.push_back(fa);
    if (domain.has_positive_costs())
      fresh.init_fluents.push_back({"total-cost", {}, 0});
    fresh.goal = goals;
    fresh.minimize_total_cost = problem.minimize_total_cost;
    return fresh;
  };

  // Returns false when the run must abort.
  auto replan = [&](const std::string& trigger) {
    if (budget <= 0) {
      report.status = FinalStatus::Aborted;
      report.abort_reason = "replan budget exhausted (" + trigger + ")";
      return false;
    }
    --budget;
    pddl::Problem fresh = build_problem();
    planner::GroundedTask task = planner::ground(domain, fresh);
    planner::PlanResult next = planner::plan(task, policy.plan_options);
    if (next.status != planner::PlanStatus::Solved) {
      report.status = FinalStatus::Aborted;
      report.abort_reason =
          next.status == planner::PlanStatus::Unsolvable
              ? "replanning found no plan (" + trigger + ")"
              : "replanning exceeded the search limit (" + trigger + ")";
      report.replans.push_back({trigger, pddl::render_problem(fresh), ""});
      return false;
    }
    report.replans.push_back({trigger, pddl::render_problem(fresh),
                              planner::render_plan(next.plan)});
    queue.assign(next.plan.steps.begin(), next.plan.steps.end());
    return true;
  };

  while (!queue.empty()) {
    planner::GroundedAction action = queue.front();
    queue.pop_front();

    StepOutcome outcome;
    outcome.action = action;
    const Executor* executor = registry.find(action.schema);
    if (executor == nullptr) {
      outcome.failure = "no executor registered for '" + action.schema + "'";
      report.steps.push_back(std::move(outcome));
      report.status = FinalStatus::Aborted;
      report.abort_reason = "unregistered action '" + action.schema + "'";
      return report;
    }

    ExecutionState snapshot = state;
    size_t artifacts_before = report.artifacts.size();
    auto started = std::chrono::steady_clock::now();
    try {
      executor->apply(action.args, state, context);
      outcome.applied = true;
    } catch (const std::exception& e) {
      state = std::move(snapshot);  // failed executors are no-ops
      report.artifacts.resize(artifacts_before);
      outcome.applied = false;
      outcome.failure = e.what();
    }
    if (outcome.applied) {
      outcome.monitor_ok =
          check_success(action, state, world, registry);
      if (!outcome.monitor_ok) {
        if (outcome.failure.empty())
          outcome.failure = "monitor reported failure";
        state = std::move(snapshot);
        report.artifacts.resize(artifacts_before);
      }
    }
    outcome.duration_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - started)
            .count();

    if (outcome.applied && outcome.monitor_ok) {
      // Advance the symbolic state by the schema's ground effects.
      const pddl::ActionSchema* schema = domain.find_action(action.schema);
      if (schema != nullptr) {
        std::unordered_map<std::string, std::string> binding;
        for (size_t i = 0;
             i < schema->params.size() && i < action.args.size(); ++i)
          binding[schema->params[i].name] = action.args[i];
        auto ground = [&binding](const pddl::Atom& atom) {
          pddl::Atom grounded;
          grounded.pred = atom.pred;
          for (const std::string& arg : atom.args) {
            auto it = binding.find(arg);
            grounded.args.push_back(it == binding.end() ? arg : it->second);
          }
          return grounded;
        };
        for (const pddl::Atom& atom : schema->delete_effects)
          symbolic.erase(ground(atom).str());
        for (const pddl::Atom& atom : schema->add_effects) {
          pddl::Atom grounded = ground(atom);
          std::string name = grounded.str();
          symbolic.insert(name);
          atom_by_name[name] = std::move(grounded);
        }
      }
      if (action.schema == "send-response" ||
          action.schema == "send-response-email") {
        const std::string& entity = action.args[1];
        if (state.has(entity))
          report.sent_responses.push_back(
              json{{"name", entity}, {"content", state.at(entity).value}});
      }
      report.steps.push_back(outcome);

      if (!state.new_goals.empty()) {
        std::vector<std::string> injected;
        injected.swap(state.new_goals);
        std::string listing;
        for (const std::string& text : injected) {
          auto parsed = pddl::parse_literal_list(text, "new_goals");
          if (!parsed.ok()) {
            report.status = FinalStatus::Aborted;
            report.abort_reason =
                "invalid injected goal '" + text + "'";
            return report;
          }
          for (const pddl::Literal& lit : parsed->literals) {
            if (std::find(goals.begin(), goals.end(), lit) == goals.end()) {
              goals.push_back(lit);
              atom_by_name.emplace(lit.atom.str(), lit.atom);
              listing += (listing.empty() ? "" : " ") + lit.str();
            }
          }
        }
        if (!listing.empty() && !replan("new-goals: " + listing))
          return report;
      }
      continue;
    }

    // Monitored failure.
    report.steps.push_back(outcome);
    const std::string key = action.str();
    if (failed_once.count(key)) {
      report.status = FinalStatus::Aborted;
      report.abort_reason = "no alternative found: " + key +
                            " failed again after replanning";
      return report;
    }
    failed_once.insert(key);
    if (!replan("monitored-failure: " + key + " (" + outcome.failure + ")"))
      return report;
  }

  report.status = goals_hold() ? FinalStatus::Success : FinalStatus::Failed;
  return report;
}

}  // namespace planx::runtime
