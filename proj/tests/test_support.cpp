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

#include "test_support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "planx/intent/task_dictionary.hpp"
#include "planx/pddl/parser.hpp"

namespace planx::testing {

std::string asset_path(const std::string& name) {
  return std::string(PLANX_ASSETS_DIR) + "/" + name;
}

std::string fixture_path(const std::string& name) {
  return std::string(PLANX_FIXTURES_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const pddl::Domain& assistant_domain() {
  static const pddl::Domain domain = [] {
    auto parsed = pddl::parse_domain(read_file(asset_path("assistant.pddl")),
                                     "assistant.pddl");
    if (!parsed.ok())
      throw std::runtime_error("assistant.pddl does not parse:\n" +
                               join_diagnostics(parsed.diagnostics));
    return *parsed;
  }();
  return domain;
}

intent::TaskDictionary validate_or_die(const nlohmann::ordered_json& raw) {
  intent::DictionaryValidation v =
      intent::validate_task_dictionary(raw, assistant_domain());
  if (!v.ok()) {
    std::string all;
    for (const std::string& e : v.errors) all += e + "\n";
    throw std::runtime_error("fixture dictionary does not validate:\n" + all);
  }
  return *v.dict;
}

intent::TaskDictionary load_dictionary(const std::string& fixture_name) {
  nlohmann::ordered_json raw =
      nlohmann::ordered_json::parse(read_file(fixture_path(fixture_name)));
  return validate_or_die(raw);
}

std::filesystem::path scratch_dir(const std::string& name) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "planx-tests" / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::filesystem::path stage_world(const std::string& world_fixture,
                                  const std::string& scratch_name) {
  std::filesystem::path dir = scratch_dir(scratch_name);
  std::filesystem::copy(fixture_path(world_fixture), dir,
                        std::filesystem::copy_options::recursive);
  return dir;
}

}  // namespace planx::testing
