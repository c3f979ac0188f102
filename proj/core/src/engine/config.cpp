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

#include "planx/engine/config.hpp"

#include <cstdlib>
#include <fstream>

namespace planx::engine {

void Config::apply_environment() {
  const char* endpoint = std::getenv("PLANX_LLM_ENDPOINT");
  if (endpoint != nullptr && *endpoint != '\0') {
    backend.type = "http";
    backend.endpoint = endpoint;
  }
}

ParseResult<Config> Config::from_json(const nlohmann::ordered_json& value) {
  ParseResult<Config> result;
  if (!value.is_object()) {
    result.diagnostics.push_back({"", 0, 0, "config must be a JSON object"});
    return result;
  }
  Config config;
  config.domain_file = value.value("domain", "");
  config.intent_catalog_file = value.value("intents", "");
  config.pattern_file = value.value("patterns", "");
  config.world_root = value.value("world", config.world_root);
  config.replan_budget = value.value("replan_budget", config.replan_budget);
  config.node_cap = value.value("node_cap", config.node_cap);
  config.task_definition = value.value("task_definition", "");
  if (value.contains("backend") && value["backend"].is_object()) {
    const auto& b = value["backend"];
    config.backend.type = b.value("type", config.backend.type);
    config.backend.script = b.value("script", "");
    config.backend.endpoint = b.value("endpoint", "");
    config.backend.timeout_ms = b.value("timeout_ms", config.backend.timeout_ms);
  }
  if (value.contains("schemas") && value["schemas"].is_array()) {
    for (const auto& s : value["schemas"]) {
      prompt::SorSchema schema;
      schema.name = s.value("name", "");
      if (s.contains("columns"))
        for (const auto& c : s["columns"])
          schema.columns.push_back(c.get<std::string>());
      config.schemas.push_back(std::move(schema));
    }
  }
  if (value.contains("dumps") && value["dumps"].is_object()) {
    const auto& d = value["dumps"];
    config.dumps.dump_dir = d.value("dir", "");
    config.dumps.dump_problem = d.value("problem", "");
    config.dumps.dump_plan = d.value("plan", "");
  }

  if (config.domain_file.empty())
    result.diagnostics.push_back({"", 0, 0, "config is missing 'domain'"});
  if (config.backend.type != "scripted" && config.backend.type != "http")
    result.diagnostics.push_back(
        {"", 0, 0, "backend.type must be 'scripted' or 'http'"});
  if (config.replan_budget < 0)
    result.diagnostics.push_back({"", 0, 0, "replan_budget must be >= 0"});
  if (!result.diagnostics.empty()) return result;
  result.value = std::move(config);
  return result;
}

ParseResult<Config> Config::load_file(const std::string& path) {
  ParseResult<Config> result;
  std::ifstream in(path);
  if (!in) {
    result.diagnostics.push_back({path, 0, 0, "cannot open config file"});
    return result;
  }
  nlohmann::ordered_json value;
  try {
    in >> value;
  } catch (const std::exception& e) {
    result.diagnostics.push_back({path, 0, 0, e.what()});
    return result;
  }
  result = from_json(value);
  for (Diagnostic& d : result.diagnostics) d.file = path;
  return result;
}

}  // namespace planx::engine
