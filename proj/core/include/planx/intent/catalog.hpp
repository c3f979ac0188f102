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

#ifndef PLANX_INTENT_CATALOG_HPP
#define PLANX_INTENT_CATALOG_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "planx/diagnostics.hpp"
#include "planx/pddl/model.hpp"

namespace planx::intent {

/// One few-shot intent: name, description and the canonical example output
/// dictionary shown to the model.
struct Intent {
  std::string name;
  std::string description;
  nlohmann::ordered_json example;
};

class IntentCatalog {
 public:
  static ParseResult<IntentCatalog> load(const nlohmann::ordered_json& config);
  static ParseResult<IntentCatalog> load_file(const std::string& path);

  const std::vector<Intent>& intents() const { return intents_; }
  const Intent* find(const std::string& name) const;

  /// Self-consistency check: every example must validate against the domain.
  /// Returns one message per failing example.
  std::vector<std::string> check_examples(const pddl::Domain& domain) const;

 private:
  std::vector<Intent> intents_;
};

}  // namespace planx::intent

#endif  // PLANX_INTENT_CATALOG_HPP
