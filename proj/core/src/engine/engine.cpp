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

#include "planx/engine/engine.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "planx/compiler/compiler.hpp"
#include "planx/pddl/parser.hpp"
#include "planx/pddl/printer.hpp"
#include "planx/planner/brute_force.hpp"
#include "planx/planner/grounding.hpp"
#include "planx/planner/plan_io.hpp"
#include "planx/prompt/llm_output.hpp"
#include "planx/prompt/prompt_builder.hpp"
#include "planx/runtime/executors.hpp"
#include "planx/runtime/response.hpp"

namespace planx::engine {
namespace {

std::string read_file(const std::string& path, std::string& error) {
  std::ifstream in(path);
  if (!in) {
    error = "cannot open " + path;
    return "";
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RequestOutcome stage_failure(const std::string& stage, const std::string& error,
                             int exit_code, const std::string& response = "") {
  RequestOutcome outcome;
  outcome.exit_code = exit_code;
  outcome.stage = stage;
  outcome.error = "stage " + stage + ": " + error;
  outcome.response = response.empty() ? outcome.error : response;
  return outcome;
}

}  // namespace

ParseResult<std::unique_ptr<Session>> Session::open(const Config& config) {
  ParseResult<std::unique_ptr<Session>> result;
  auto fail = [&result](const std::string& message) {
    result.diagnostics.push_back({"", 0, 0, message});
  };

  auto session = std::unique_ptr<Session>(new Session());
  session->config_ = config;

  std::string io_error;
  std::string domain_text = read_file(config.domain_file, io_error);
  if (!io_error.empty()) {
    fail(io_error);
    return result;
  }
  auto domain = pddl::parse_domain(domain_text, config.domain_file);
  if (!domain.ok()) {
    for (const Diagnostic& d : domain.diagnostics) fail(d.str());
    return result;
  }
  session->domain_ = std::move(*domain);

  if (!config.intent_catalog_file.empty()) {
    auto catalog = intent::IntentCatalog::load_file(config.intent_catalog_file);
    if (!catalog.ok()) {
      for (const Diagnostic& d : catalog.diagnostics) fail(d.str());
      return result;
    }
    // The shipped catalog must be self-consistent with the domain.
    std::vector<std::string> problems =
        catalog->check_examples(session->domain_);
    for (const std::string& p : problems) fail(p);
    if (!problems.empty()) return result;
    session->catalog_ = std::move(*catalog);
  }

  if (!config.pattern_file.empty()) {
    auto patterns = intent::PatternSet::load_file(config.pattern_file);
    if (!patterns.ok()) {
      for (const Diagnostic& d : patterns.diagnostics) fail(d.str());
      return result;
    }
    session->patterns_ = std::move(*patterns);
  }

  if (config.backend.type == "scripted") {
    if (!config.backend.script.empty()) {
      auto scripted = prompt::ScriptedBackend::load_file(config.backend.script);
      if (!scripted.ok()) {
        for (const Diagnostic& d : scripted.diagnostics) fail(d.str());
        return result;
      }
      session->backend_ = std::move(*scripted);
    } else {
      session->backend_ = std::make_unique<prompt::ScriptedBackend>(
          std::map<std::string, std::string>{});
    }
  } else {
    if (config.backend.endpoint.empty()) {
      fail("http backend needs an endpoint");
      return result;
    }
    session->backend_ = std::make_unique<prompt::HttpBackend>(
        config.backend.endpoint, config.backend.timeout_ms);
  }

  session->world_ =
      std::make_unique<runtime::OfficeWorld>(config.world_root);
  runtime::register_office_executors(session->registry_);

  result.value = std::move(session);
  return result;
}

std::string Session::next_dump_tag() {
  ++request_index_;
  char tag[32];
  std::snprintf(tag, sizeof tag, "request-%03d", request_index_);
  return tag;
}

void Session::dump_file(const std::string& tag, const std::string& name,
                        const std::string& contents) {
  if (config_.dumps.dump_dir.empty()) return;
  std::filesystem::path dir =
      std::filesystem::path(config_.dumps.dump_dir) / tag;
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / name, std::ios::trunc);
  out << contents;
}

RequestOutcome Session::handle(const std::string& request) {
  const std::string tag = next_dump_tag();

  intent::EntityMap entities = intent::extract_entities(request, patterns_);

  prompt::PromptInputs inputs;
  inputs.request = request;
  inputs.entities = entities;
  inputs.domain = &domain_;
  inputs.catalog = &catalog_;
  inputs.schemas = config_.schemas;
  inputs.task_definition = config_.task_definition;
  const std::string prompt_text = prompt::build_prompt(inputs);
  dump_file(tag, "prompt.txt", prompt_text);

  prompt::CompletionResult completion = backend_->complete(prompt_text);
  if (!completion.ok)
    return stage_failure("backend", completion.error, kBackendError);
  dump_file(tag, "reply.txt", completion.text);

  auto parsed = prompt::parse_llm_output(completion.text);
  if (!parsed.ok())
    return stage_failure("llm-output", join_diagnostics(parsed.diagnostics),
                         kValidationError, kFallbackResponse);

  intent::DictionaryValidation validation =
      intent::validate_task_dictionary(*parsed, domain_);
  if (!validation.ok()) {
    std::string errors;
    for (const std::string& e : validation.errors)
      errors += (errors.empty() ? "" : "; ") + e;
    return stage_failure("validate", errors, kValidationError,
                         kFallbackResponse);
  }

  intent::DictionaryValidation merged =
      intent::merge_task_dictionaries({*validation.dict});
  if (!merged.ok()) {
    std::string errors;
    for (const std::string& e : merged.errors)
      errors += (errors.empty() ? "" : "; ") + e;
    return stage_failure("merge", errors, kValidationError, kFallbackResponse);
  }

  return run_task(*merged.dict, tag);
}

RequestOutcome Session::handle_seeded(const nlohmann::ordered_json& dictionary) {
  const std::string tag = next_dump_tag();
  intent::DictionaryValidation validation =
      intent::validate_task_dictionary(dictionary, domain_);
  if (!validation.ok()) {
    std::string errors;
    for (const std::string& e : validation.errors)
      errors += (errors.empty() ? "" : "; ") + e;
    return stage_failure("validate", errors, kValidationError,
                         kFallbackResponse);
  }
  return run_task(*validation.dict, tag);
}

RequestOutcome Session::run_task(const intent::TaskDictionary& task,
                                 const std::string& tag) {
  dump_file(tag, "dictionary.json", task.to_json().dump(2) + "\n");

  auto compiled = compiler::compile_problem(task, domain_, "request");
  if (!compiled.ok())
    return stage_failure("compile", join_diagnostics(compiled.diagnostics),
                         kValidationError);
  const pddl::Problem& problem = *compiled;
  const std::string problem_text = pddl::render_problem(problem);
  dump_file(tag, "problem.pddl", problem_text);
  if (!config_.dumps.dump_problem.empty()) {
    std::ofstream out(config_.dumps.dump_problem, std::ios::trunc);
    out << problem_text;
  }

  planner::GroundedTask grounded = planner::ground(domain_, problem);

  planner::PlanOptions options;
  options.node_cap = config_.node_cap;
  planner::PlanResult planned = planner::plan(grounded, options);
  if (planned.status == planner::PlanStatus::LimitExceeded)
    return stage_failure(
        "plan", "search limit exceeded before proving solvability",
        kUnsolvable);
  if (planned.status == planner::PlanStatus::Unsolvable) {
    std::string unmet;
    for (int g : grounded.goal_pos) {
      if (!unmet.empty()) unmet += ' ';
      unmet += grounded.atom_names[g];
    }
    return stage_failure("plan", "no plan achieves the goals: " + unmet,
                         kUnsolvable);
  }

  const std::string plan_text = planner::render_plan(planned.plan);
  dump_file(tag, "plan.txt", plan_text);
  if (!config_.dumps.dump_plan.empty()) {
    std::ofstream out(config_.dumps.dump_plan, std::ios::trunc);
    out << plan_text;
  }

  runtime::ExecutionState state = runtime::ExecutionState::seed(task, problem);
  runtime::ReplanPolicy policy;
  policy.budget = config_.replan_budget;
  policy.plan_options = options;
  runtime::ExecutionReport report =
      runtime::execute_plan(planned.plan, state, *world_, registry_, policy,
                            domain_, problem, backend_.get());
  report.response = runtime::build_response(report);
  dump_file(tag, "report.json", report.to_json().dump(2) + "\n");
  dump_file(tag, "response.txt", report.response);

  RequestOutcome outcome;
  outcome.response = report.response;
  outcome.report = std::move(report);
  switch (outcome.report->status) {
    case runtime::FinalStatus::Success:
      outcome.exit_code = kOk;
      break;
    case runtime::FinalStatus::Failed:
    case runtime::FinalStatus::Aborted:
      outcome.exit_code = kExecutionAborted;
      outcome.stage = "execute";
      outcome.error = "stage execute: " + (outcome.report->abort_reason.empty()
                                               ? std::string("goals not reached")
                                               : outcome.report->abort_reason);
      break;
  }
  return outcome;
}

RequestOutcome handle_request(const std::string& request,
                              const Config& config) {
  auto session = Session::open(config);
  if (!session.ok()) {
    RequestOutcome outcome;
    outcome.exit_code = kValidationError;
    outcome.stage = "config";
    outcome.error = "stage config: " + join_diagnostics(session.diagnostics);
    outcome.response = outcome.error;
    return outcome;
  }
  return (*session)->handle(request);
}

}  // namespace planx::engine
