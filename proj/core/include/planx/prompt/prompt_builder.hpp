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

#ifndef PLANX_PROMPT_PROMPT_BUILDER_HPP
#define PLANX_PROMPT_PROMPT_BUILDER_HPP

#include <string>
#include <vector>

#include "planx/intent/catalog.hpp"
#include "planx/intent/entities.hpp"
#include "planx/pddl/model.hpp"

namespace planx::prompt {

/// A system-of-record schema shown to the model so it can target queries at
/// the right data source.
struct SorSchema {
  std::string name;
  std::vector<std::string> columns;  // unique within one schema
};

struct PromptInputs {
  std::string request;
  intent::EntityMap entities;
  const pddl::Domain* domain = nullptr;
  const intent::IntentCatalog* catalog = nullptr;
  std::vector<SorSchema> schemas;
  // Leading task definition; the default frames office/sales assistance.
  std::string task_definition;
};

/// Assembles the full instruction prompt: task definition, SOR schemas, the
/// domain's types/predicates/actions, output-dictionary rules, state
/// representation rules, intent-merging rule, other constraints, the few-shot
/// Intent:/Output: examples, detected entities, and the request last.
/// Deterministic for fixed inputs; the request appears verbatim.
std::string build_prompt(const PromptInputs& inputs);

}  // namespace planx::prompt

#endif  // PLANX_PROMPT_PROMPT_BUILDER_HPP
