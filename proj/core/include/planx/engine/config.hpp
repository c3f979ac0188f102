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

#ifndef PLANX_ENGINE_CONFIG_HPP
#define PLANX_ENGINE_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "planx/diagnostics.hpp"
#include "planx/prompt/prompt_builder.hpp"

namespace planx::engine {

struct BackendConfig {
  std::string type = "scripted";  // scripted | http
  std::string script;             // scripted replies file
  std::string endpoint;           // http endpoint
  int timeout_ms = 10000;
};

struct DumpOptions {
  std::string dump_dir;      // per-request artifact directory
  std::string dump_problem;  // single-file problem dump
  std::string dump_plan;     // single-file plan dump
};

struct Config {
  std::string domain_file;
  std::string intent_catalog_file;
  std::string pattern_file;
  BackendConfig backend;
  std::string world_root = "world";
  int replan_budget = 3;
  std::int64_t node_cap = 2'000'000;
  std::string task_definition;
  std::vector<prompt::SorSchema> schemas;
  DumpOptions dumps;

  /// PLANX_LLM_ENDPOINT, when set, selects the http backend at that endpoint.
  void apply_environment();

  static ParseResult<Config> from_json(const nlohmann::ordered_json& value);
  static ParseResult<Config> load_file(const std::string& path);
};

}  // namespace planx::engine

#endif  // PLANX_ENGINE_CONFIG_HPP
