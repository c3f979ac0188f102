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

#ifndef PLANX_RUNTIME_EXECUTION_HPP
#define PLANX_RUNTIME_EXECUTION_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "planx/intent/task_dictionary.hpp"
#include "planx/planner/search.hpp"
#include "planx/prompt/backend.hpp"
#include "planx/runtime/world.hpp"

namespace planx::runtime {

using json = nlohmann::ordered_json;

/// One entry of the execution state: the low-level counterpart of a PDDL
/// object.
struct Record {
  std::string type;  // PDDL type
  json value;
  json extras = json::object();
};

/// Mutable name -> record map mirroring the task dictionary, updated by
/// executors at run time. Insertion order is preserved. `new_goals` is the
/// reserved slot executors use to inject goals discovered during execution.
class ExecutionState {
 public:
  bool has(const std::string& name) const;
  Record& at(const std::string& name);
  const Record& at(const std::string& name) const;
  void put(const std::string& name, Record record);
  const std::vector<std::pair<std::string, Record>>& entries() const {
    return entries_;
  }

  std::vector<std::string> new_goals;

  json to_json() const;
  /// Seeds entries from the dictionary, then adds null-valued records for
  /// problem objects with no dictionary entry (e.g. the synthesized agent).
  static ExecutionState seed(const intent::TaskDictionary& task,
                             const pddl::Problem& problem);

 private:
  std::vector<std::pair<std::string, Record>> entries_;
  std::map<std::string, size_t> index_;
};

/// Raised by executors to signal a monitored failure with a cause.
struct ExecutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExecContext {
  OfficeWorld* world = nullptr;
  prompt::CompletionBackend* backend = nullptr;  // for the LLM-backed actions
  std::vector<std::string>* artifacts = nullptr; // produced file paths
};

/// Concrete implementation of one action schema: apply mpage-turns the state
/// against the world; succeeded is the side-effect-free monitor.
struct Executor {
  std::function<void(const std::vector<std::string>& args, ExecutionState&,
                     ExecContext&)>
      apply;
  std::function<bool(const std::vector<std::string>& args,
                     const ExecutionState&, const OfficeWorld&)>
      succeeded;
};

class ExecutorRegistry {
 public:
  void add(const std::string& action, Executor executor);
  const Executor* find(const std::string& action) const;
  std::vector<std::string> action_names() const;

 private:
  std::map<std::string, Executor> executors_;
};

struct StepOutcome {
  planner::GroundedAction action;
  bool applied = false;
  bool monitor_ok = false;
  std::string failure;
  double duration_ms = 0.0;  // excluded from serialization and equality
};

struct ReplanEvent {
  std::string trigger;  // "monitored-failure: (...)" or "new-goals: ..."
  std::string problem;  // rendered PDDL of the fresh problem
  std::string plan;     // rendered plan
};

enum class FinalStatus { Success, Failed, Aborted };

struct ExecutionReport {
  std::vector<StepOutcome> steps;
  std::vector<ReplanEvent> replans;
  FinalStatus status = FinalStatus::Failed;
  std::string abort_reason;
  std::vector<std::string> artifacts;
  /// Payloads of responses sent during execution, for response generation.
  std::vector<json> sent_responses;
  std::string response;

  json to_json() const;  // deterministic: durations are not serialized
};

/// Deterministic equality ignoring durations.
bool same_outcome(const ExecutionReport& a, const ExecutionReport& b);

struct ReplanPolicy {
  int budget = 3;
  planner::PlanOptions plan_options;
};

/// Executes the plan step by step. After each apply the monitor runs; the
/// symbolic state advances by the action's PDDL effects only on monitored
/// success. A failure or injected goals trigger replanning from the tracked
/// symbolic state. Aborts when the budget is exhausted, when replanning is
/// unsolvable, or when the same ground action fails twice in one session.
ExecutionReport execute_plan(const planner::Plan& plan, ExecutionState& state,
                             OfficeWorld& world,
                             const ExecutorRegistry& registry,
                             const ReplanPolicy& policy,
                             const pddl::Domain& domain,
                             const pddl::Problem& problem,
                             prompt::CompletionBackend* backend = nullptr);

/// Dispatches one action to its executor (throws ExecutionError when no
/// executor is registered; executor errors propagate).
void apply_action(const planner::GroundedAction& action, ExecutionState& state,
                  OfficeWorld& world, const ExecutorRegistry& registry,
                  ExecContext& context);

/// Pure monitor evaluation for one action.
bool check_success(const planner::GroundedAction& action,
                   const ExecutionState& state, const OfficeWorld& world,
                   const ExecutorRegistry& registry);

}  // namespace planx::runtime

#endif  // PLANX_RUNTIME_EXECUTION_HPP
