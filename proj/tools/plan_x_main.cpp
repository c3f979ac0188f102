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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "planx/engine/engine.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string backend;
  std::string world;
  std::string dump_dir;
  std::string dump_problem;
  std::string dump_plan;
  std::string seed_state;
};

void add_common_options(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--config", options.config_path, "Config file (JSON)");
  cmd->add_option("--backend", options.backend,
                  "Completion backend: scripted | http")
      ->check(CLI::IsMember({"scripted", "http"}));
  cmd->add_option("--world", options.world, "Office-world root directory");
  cmd->add_option("--dump-dir", options.dump_dir,
                  "Write per-request artifacts (prompt, dictionary, problem, "
                  "plan, report) under this directory");
  cmd->add_option("--dump-problem", options.dump_problem,
                  "Write the compiled PDDL problem to this file");
  cmd->add_option("--dump-plan", options.dump_plan,
                  "Write the solved plan to this file");
  cmd->add_option("--seed-state", options.seed_state,
                  "Task-dictionary JSON file; bypasses entity extraction and "
                  "the completion backend");
}

int load_config(const CommonOptions& options, planx::engine::Config& config) {
  if (!options.config_path.empty()) {
    auto loaded = planx::engine::Config::load_file(options.config_path);
    if (!loaded.ok()) {
      std::cerr << planx::join_diagnostics(loaded.diagnostics) << '\n';
      return planx::engine::kValidationError;
    }
    config = *loaded;
  }
  if (!options.backend.empty()) config.backend.type = options.backend;
  if (!options.world.empty()) config.world_root = options.world;
  if (!options.dump_dir.empty()) config.dumps.dump_dir = options.dump_dir;
  if (!options.dump_problem.empty())
    config.dumps.dump_problem = options.dump_problem;
  if (!options.dump_plan.empty()) config.dumps.dump_plan = options.dump_plan;
  config.apply_environment();
  return 0;
}

int run_outcome(const planx::engine::RequestOutcome& outcome) {
  std::cout << outcome.response;
  if (!outcome.response.empty() && outcome.response.back() != '\n')
    std::cout << '\n';
  if (!outcome.error.empty()) std::cerr << outcome.error << '\n';
  return outcome.exit_code;
}

int handle_one(planx::engine::Session& session, const CommonOptions& options,
               const std::string& request) {
  if (!options.seed_state.empty()) {
    std::ifstream in(options.seed_state);
    if (!in) {
      std::cerr << "cannot open seed state " << options.seed_state << '\n';
      return planx::engine::kValidationError;
    }
    nlohmann::ordered_json dictionary;
    try {
      in >> dictionary;
    } catch (const std::exception& e) {
      std::cerr << "seed state is not JSON: " << e.what() << '\n';
      return planx::engine::kValidationError;
    }
    return run_outcome(session.handle_seeded(dictionary));
  }
  return run_outcome(session.handle(request));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plan-x: natural-language office requests planned and executed "
               "against a simulated office environment"};
  app.require_subcommand(1);

  CommonOptions options;
  std::string request;

  CLI::App* run = app.add_subcommand("run", "Handle one request and exit");
  run->add_option("request", request, "The request text");
  add_common_options(run, options);

  CLI::App* repl = app.add_subcommand(
      "repl", "Interactive loop; the office world persists across turns");
  add_common_options(repl, options);

  CLI11_PARSE(app, argc, argv);

  planx::engine::Config config;
  if (int rc = load_config(options, config); rc != 0) return rc;

  auto session = planx::engine::Session::open(config);
  if (!session.ok()) {
    std::cerr << planx::join_diagnostics(session.diagnostics) << '\n';
    return planx::engine::kValidationError;
  }

  if (run->parsed()) {
    if (request.empty() && options.seed_state.empty()) {
      std::cerr << "run needs a request (or --seed-state)\n";
      return planx::engine::kValidationError;
    }
    return handle_one(**session, options, request);
  }

  // REPL: one request per line; blank line or EOF ends the session.
  std::string line;
  int last = planx::engine::kOk;
  while (true) {
    std::cout << "plan-x> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line.empty() || line == ":quit" || line == ":q") break;
    last = handle_one(**session, options, line);
  }
  return last;
}
