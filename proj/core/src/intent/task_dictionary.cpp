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

#include "planx/intent/task_dictionary.hpp"

#include <algorithm>
#include <sstream>

#include "planx/pddl/parser.hpp"

namespace planx::intent {

const EntityRecord* TaskDictionary::find(const std::string& key) const {
  for (const auto& [name, record] : entities)
    if (name == key) return &record;
  return nullptr;
}

json TaskDictionary::to_json() const {
  json out = json::object();
  for (const auto& [key, record] : entities) {
    json entry = json::object();
    entry["type"] = record.type;
    entry["value"] = record.value;
    if (record.extras.is_object())
      for (const auto& [k, v] : record.extras.items()) entry[k] = v;
    out[key] = std::move(entry);
  }
  out["init_state"] = {{"type", "state"}, {"value", init_state}};
  out["goals"] = {{"type", "state"}, {"value", goals}};
  return out;
}

namespace {

// init_state/goals may be a Fig-2 style {"type":"state","value":"..."} object
// or a bare string.
std::optional<std::string> state_string(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_object() && value.contains("value") && value["value"].is_string())
    return value["value"].get<std::string>();
  return std::nullopt;
}

}  // namespace

DictionaryValidation validate_task_dictionary(const json& raw,
                                              const pddl::Domain& domain) {
  DictionaryValidation out;
  auto error = [&out](const std::string& msg) { out.errors.push_back(msg); };

  if (!raw.is_object()) {
    error("task dictionary must be a JSON object");
    return out;
  }

  TaskDictionary dict;
  bool has_init = false;
  bool has_goals = false;
  for (const auto& [key, value] : raw.items()) {
    if (key == "init_state" || key == "goals") {
      auto text = state_string(value);
      if (!text) {
        error("'" + key + "' must carry a string value");
        continue;
      }
      (key == "init_state" ? dict.init_state : dict.goals) = *text;
      (key == "init_state" ? has_init : has_goals) = true;
      continue;
    }
    if (key != pddl::to_lower(key)) {
      error("key '" + key + "' not lowercase");
      continue;
    }
    if (domain.has_type(key)) {
      error("key '" + key + "' collides with a type name");
      continue;
    }
    if (!value.is_object()) {
      error("entity '" + key + "' must be an object with type and value");
      continue;
    }
    EntityRecord record;
    record.extras = json::object();
    if (!value.contains("type") || !value["type"].is_string()) {
      error("entity '" + key + "' is missing a string 'type'");
      continue;
    }
    record.type = pddl::to_lower(value["type"].get<std::string>());
    if (!domain.has_type(record.type))
      error("unknown pddl type '" + record.type + "' of entity '" + key + "'");
    for (const auto& [field, fv] : value.items()) {
      if (field == "type") continue;
      if (field == "value")
        record.value = fv;
      else
        record.extras[field] = fv;
    }
    dict.entities.push_back({key, std::move(record)});
  }
  if (!has_init) error("missing mandatory key 'init_state'");
  if (!has_goals) error("missing mandatory key 'goals'");

  auto resolve_type = [&](const std::string& arg) -> const std::string* {
    for (const auto& [key, record] : dict.entities)
      if (key == arg) return &record.type;
    if (const pddl::TypedName* c = domain.find_constant(arg)) return &c->type;
    return nullptr;
  };

  auto check_literals = [&](const std::string& text, const std::string& where,
                            bool allow_negated, bool allow_fluents,
                            std::vector<pddl::Literal>& literals,
                            std::vector<pddl::FluentAssignment>& fluents) {
    auto parsed = pddl::parse_literal_list(text, where);
    if (!parsed.ok()) {
      for (const Diagnostic& d : parsed.diagnostics)
        error(where + ": " + d.message);
      return;
    }
    for (const pddl::Literal& lit : parsed->literals) {
      if (lit.negated && !allow_negated) {
        error(where + ": negated literal " + lit.str() + " not allowed");
        continue;
      }
      const pddl::Predicate* pred = domain.find_predicate(lit.atom.pred);
      if (pred == nullptr) {
        error(where + ": unknown predicate in " + lit.atom.str());
        continue;
      }
      if (pred->params.size() != lit.atom.args.size()) {
        error(where + ": " + lit.atom.str() + " has " +
              std::to_string(lit.atom.args.size()) + " arguments, '" +
              pred->name + "' takes " + std::to_string(pred->params.size()));
        continue;
      }
      bool arg_ok = true;
      for (size_t i = 0; i < lit.atom.args.size(); ++i) {
        const std::string* type = resolve_type(lit.atom.args[i]);
        if (type == nullptr) {
          error(where + ": argument '" + lit.atom.args[i] + "' of " +
                lit.atom.str() + " is not a dictionary key or domain constant");
          arg_ok = false;
          continue;
        }
        if (!domain.is_subtype(*type, pred->params[i].type)) {
          error(where + ": argument '" + lit.atom.args[i] + "' of " +
                lit.atom.str() + " has type " + *type + ", expected " +
                pred->params[i].type);
          arg_ok = false;
        }
      }
      if (arg_ok) literals.push_back(lit);
    }
    for (const pddl::FluentAssignment& fa : parsed->fluents) {
      if (!allow_fluents) {
        error(where + ": numeric assignment " + fa.str() + " not allowed");
        continue;
      }
      const pddl::FluentDecl* fl = domain.find_fluent(fa.fluent);
      if (fl == nullptr) {
        error(where + ": assignment to undeclared fluent '" + fa.fluent + "'");
        continue;
      }
      if (fl->params.size() != fa.args.size()) {
        error(where + ": fluent '" + fa.fluent + "' takes " +
              std::to_string(fl->params.size()) + " arguments");
        continue;
      }
      bool arg_ok = true;
      for (size_t i = 0; i < fa.args.size(); ++i) {
        const std::string* type = resolve_type(fa.args[i]);
        if (type == nullptr || !domain.is_subtype(*type, fl->params[i].type)) {
          error(where + ": bad argument '" + fa.args[i] + "' in " + fa.str());
          arg_ok = false;
        }
      }
      if (fa.value < 0) {
        error(where + ": fluent value must be non-negative in " + fa.str());
        arg_ok = false;
      }
      if (arg_ok) fluents.push_back(fa);
    }
  };

  if (has_init)
    check_literals(dict.init_state, "init_state", false, true,
                   dict.init_literals, dict.init_fluents);
  if (has_goals) {
    std::vector<pddl::FluentAssignment> none;
    check_literals(dict.goals, "goals", true, false, dict.goal_literals, none);
  }

  // The prompt instructs the model not to repeat goals in the initial state;
  // tolerated with a warning since already-satisfied goals plan soundly.
  for (const pddl::Literal& g : dict.goal_literals) {
    if (g.negated) continue;
    if (std::find(dict.init_literals.begin(), dict.init_literals.end(), g) !=
        dict.init_literals.end())
      out.warnings.push_back("goal literal " + g.str() +
                             " already appears in init_state");
  }

  if (!out.errors.empty()) return out;
  out.dict = std::move(dict);
  return out;
}

DictionaryValidation merge_task_dictionaries(
    const std::vector<TaskDictionary>& dicts) {
  DictionaryValidation out;
  TaskDictionary merged;

  for (const TaskDictionary& dict : dicts) {
    for (const auto& [key, record] : dict.entities) {
      const EntityRecord* existing = merged.find(key);
      if (existing == nullptr) {
        merged.entities.push_back({key, record});
      } else if (!(*existing == record)) {
        out.errors.push_back("key '" + key +
                             "' bound to structurally different records");
      }
    }
    for (const pddl::Literal& lit : dict.init_literals)
      if (std::find(merged.init_literals.begin(), merged.init_literals.end(),
                    lit) == merged.init_literals.end())
        merged.init_literals.push_back(lit);
    for (const pddl::FluentAssignment& fa : dict.init_fluents) {
      auto same = std::find_if(
          merged.init_fluents.begin(), merged.init_fluents.end(),
          [&fa](const pddl::FluentAssignment& other) {
            return other.fluent == fa.fluent && other.args == fa.args;
          });
      if (same == merged.init_fluents.end())
        merged.init_fluents.push_back(fa);
      else if (same->value != fa.value)
        out.errors.push_back("conflicting assignments for " + fa.str());
    }
    for (const pddl::Literal& lit : dict.goal_literals)
      if (std::find(merged.goal_literals.begin(), merged.goal_literals.end(),
                    lit) == merged.goal_literals.end())
        merged.goal_literals.push_back(lit);
  }

  std::ostringstream init;
  for (size_t i = 0; i < merged.init_literals.size(); ++i)
    init << (i ? " " : "") << merged.init_literals[i].str();
  for (const pddl::FluentAssignment& fa : merged.init_fluents)
    init << (init.tellp() > 0 ? " " : "") << fa.str();
  merged.init_state = init.str();

  std::ostringstream goals;
  goals << "(and";
  for (const pddl::Literal& lit : merged.goal_literals) goals << ' ' << lit.str();
  goals << ')';
  merged.goals = goals.str();

  if (!out.errors.empty()) return out;
  out.dict = std::move(merged);
  return out;
}

}  // namespace planx::intent
