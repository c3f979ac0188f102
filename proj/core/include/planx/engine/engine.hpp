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

#ifndef PLANX_ENGINE_ENGINE_HPP
#define PLANX_ENGINE_ENGINE_HPP

#include <memory>
#include <optional>
#include <string>

#include "planx/engine/config.hpp"
#include "planx/intent/catalog.hpp"
#include "planx/intent/entities.hpp"
#include "planx/intent/task_dictionary.hpp"
#include "planx/pddl/model.hpp"
#include "planx/prompt/backend.hpp"
#include "planx/runtime/execution.hpp"

namespace planx::engine {

/// Process exit codes of the request pipeline.
enum ExitCode : int {
  kOk = 0,
  kValidationError = 2,
  kUnsolvable = 3,
  kExecutionAborted = 4,
  kBackendError = 5,
};

inline constexpr char kFallbackResponse[] =
    "Apologies, I'm not able to help with that. Try another question!";

struct RequestOutcome {
  int exit_code = kOk;
  std::string response;
  std::string stage;  // pipeline stage that failed, empty on success
  std::string error;  // diagnostic text, empty on success
  std::optional<runtime::ExecutionReport> report;
};

/// One loaded pipeline: domain, catalog, patterns, backend and a single
/// OfficeWorld that persists across requests (REPL semantics). One request
/// is processed at a time.
class Session {
 public:
  static ParseResult<std::unique_ptr<Session>> open(const Config& config);

  /// Full pipeline: entities -> prompt -> completion -> parse -> validate ->
  /// merge -> compile -> ground -> plan -> execute -> respond.
  RequestOutcome handle(const std::string& request);

  /// Planner/runtime-only entry: a pre-seeded task dictionary bypasses the
  /// entity, prompt and completion stages.
  RequestOutcome handle_seeded(const nlohmann::ordered_json& dictionary);

  const pddl::Domain& domain() const { return domain_; }
  runtime::OfficeWorld& world() { return *world_; }
  const Config& config() const { return config_; }

 private:
  Session() = default;
  RequestOutcome run_task(const intent::TaskDictionary& task,
                          const std::string& dump_tag);
  std::string next_dump_tag();
  void dump_file(const std::string& tag, const std::string& name,
                 const std::string& contents);

  Config config_;
  pddl::Domain domain_;
  intent::IntentCatalog catalog_;
  intent::PatternSet patterns_;
  std::unique_ptr<prompt::CompletionBackend> backend_;
  std::unique_ptr<runtime::OfficeWorld> world_;
  runtime::ExecutorRegistry registry_;
  int request_index_ = 0;
};

/// One-shot convenience wrapper: open a session, handle one request.
RequestOutcome handle_request(const std::string& request, const Config& config);

}  // namespace planx::engine

#endif  // PLANX_ENGINE_ENGINE_HPP
