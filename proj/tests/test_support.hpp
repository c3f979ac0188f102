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

#ifndef PLANX_TESTS_TEST_SUPPORT_HPP
#define PLANX_TESTS_TEST_SUPPORT_HPP

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "planx/intent/task_dictionary.hpp"
#include "planx/pddl/model.hpp"

namespace planx::testing {

std::string asset_path(const std::string& name);
std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);

/// The shipped assistant domain, parsed once per process.
const pddl::Domain& assistant_domain();

/// Validates a dictionary fixture against the assistant domain; aborts the
/// test on validation errors.
intent::TaskDictionary load_dictionary(const std::string& fixture_name);
intent::TaskDictionary validate_or_die(const nlohmann::ordered_json& raw);

/// Fresh scratch directory under the build tree, wiped on creation.
std::filesystem::path scratch_dir(const std::string& name);

/// Copies the named world fixture into a scratch directory and returns it.
std::filesystem::path stage_world(const std::string& world_fixture,
                                  const std::string& scratch_name);

}  // namespace planx::testing

#endif  // PLANX_TESTS_TEST_SUPPORT_HPP
