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

#include "planx/intent/catalog.hpp"

#include <fstream>
#include <unordered_set>

#include "planx/intent/task_dictionary.hpp"

namespace planx::intent {

ParseResult<IntentCatalog> IntentCatalog::load(
    const nlohmann::ordered_json& config) {
  ParseResult<IntentCatalog> result;
  IntentCatalog catalog;
  if (!config.is_array()) {
    result.diagnostics.push_back(
        {"", 0, 0, "intent catalog must be a JSON list"});
    return result;
  }
  std::unordered_set<std::string> names;
  for (const auto& item : config) {
    if (!item.is_object() || !item.contains("name") ||
        !item.contains("example")) {
      result.diagnostics.push_back(
          {"", 0, 0, "each intent needs 'name', 'description' and 'example'"});
      continue;
    }
    Intent intent;
    intent.name = item["name"].get<std::string>();
    intent.description = item.value("description", std::string{});
    intent.example = item["example"];
    if (!names.insert(intent.name).second)
      result.diagnostics.push_back(
          {"", 0, 0, "duplicate intent name '" + intent.name + "'"});
    catalog.intents_.push_back(std::move(intent));
  }
  if (!result.diagnostics.empty()) return result;
  result.value = std::move(catalog);
  return result;
}

ParseResult<IntentCatalog> IntentCatalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult<IntentCatalog> result;
    result.diagnostics.push_back({path, 0, 0, "cannot open intent catalog"});
    return result;
  }
  nlohmann::ordered_json config;
  try {
    in >> config;
  } catch (const std::exception& e) {
    ParseResult<IntentCatalog> result;
    result.diagnostics.push_back({path, 0, 0, e.what()});
    return result;
  }
  auto result = load(config);
  for (Diagnostic& d : result.diagnostics) d.file = path;
  return result;
}

const Intent* IntentCatalog::find(const std::string& name) const {
  for (const Intent& intent : intents_)
    if (intent.name == name) return &intent;
  return nullptr;
}

std::vector<std::string> IntentCatalog::check_examples(
    const pddl::Domain& domain) const {
  std::vector<std::string> problems;
  for (const Intent& intent : intents_) {
    DictionaryValidation v = validate_task_dictionary(intent.example, domain);
    for (const std::string& e : v.errors)
      problems.push_back("intent '" + intent.name + "': " + e);
  }
  return problems;
}

}  // namespace planx::intent
