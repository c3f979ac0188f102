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

#ifndef PLANX_INTENT_TASK_DICTIONARY_HPP
#define PLANX_INTENT_TASK_DICTIONARY_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "planx/pddl/model.hpp"

namespace planx::intent {

using json = nlohmann::ordered_json;

struct EntityRecord {
  std::string type;   // PDDL type
  json value;         // opaque runtime value
  json extras;        // object with entity-specific keys (to, subject, ...)

  friend bool operator==(const EntityRecord&, const EntityRecord&) = default;
};

/// The validated structured output of the completion backend: entities plus
/// the mandatory init_state and goals literal strings.
struct TaskDictionary {
  std::vector<std::pair<std::string, EntityRecord>> entities;  // insertion order
  std::string init_state;
  std::string goals;

  // Parsed literal forms (filled by validation).
  std::vector<pddl::Literal> init_literals;
  std::vector<pddl::FluentAssignment> init_fluents;
  std::vector<pddl::Literal> goal_literals;

  const EntityRecord* find(const std::string& key) const;
  /// Serializes back to the wire shape (entity objects with type/value/extras,
  /// then init_state and goals as {"type":"state","value":...}).
  json to_json() const;
};

struct DictionaryValidation {
  std::optional<TaskDictionary> dict;
  std::vector<std::string> errors;    // the full list, never just the first
  std::vector<std::string> warnings;  // e.g. goal literals repeated in init

  bool ok() const { return dict.has_value(); }
};

DictionaryValidation validate_task_dictionary(const json& raw,
                                              const pddl::Domain& domain);

/// Entity union (conflicting records under one key are an error), init and
/// goal literal concatenation with duplicates removed. Associative and
/// commutative up to set equality.
DictionaryValidation merge_task_dictionaries(
    const std::vector<TaskDictionary>& dicts);

}  // namespace planx::intent

#endif  // PLANX_INTENT_TASK_DICTIONARY_HPP
