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

#ifndef PLANX_PDDL_MODEL_HPP
#define PLANX_PDDL_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace planx::pddl {

/// A name paired with its declared type. Used for predicate/action parameters
/// (name begins with '?') and for problem objects and domain constants.
struct TypedName {
  std::string name;
  std::string type = "object";

  friend bool operator==(const TypedName&, const TypedName&) = default;
};

struct Predicate {
  std::string name;
  std::vector<TypedName> params;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

/// Numeric fluent declaration, e.g. (total-cost) or (database-cost ?f - data-file).
struct FluentDecl {
  std::string name;
  std::vector<TypedName> params;

  friend bool operator==(const FluentDecl&, const FluentDecl&) = default;
};

/// Predicate applied to terms. Terms are variables ('?x') inside action
/// schemas and object names in ground context (init, goal, grounded actions).
struct Atom {
  std::string pred;
  std::vector<std::string> args;

  std::string str() const;
  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct Literal {
  Atom atom;
  bool negated = false;

  std::string str() const;
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// The action's (increase (total-cost) ...) term: a constant amount, or a
/// static fluent applied to one of the action's parameters. Actions without an
/// increase clause cost 0.
struct CostTerm {
  enum class Kind { None, Constant, Fluent };
  Kind kind = Kind::None;
  std::int64_t constant = 0;
  std::string fluent;     // fluent name, Kind::Fluent only
  std::string fluent_arg; // parameter variable the fluent is applied to

  friend bool operator==(const CostTerm&, const CostTerm&) = default;
};

struct ActionSchema {
  std::string name;
  std::vector<TypedName> params;
  std::vector<Literal> precondition;
  std::vector<Atom> add_effects;
  std::vector<Atom> delete_effects;
  CostTerm cost;
};

struct Domain {
  std::string name;
  std::vector<std::string> requirements;
  // Type declarations in source order; every type except "object" has exactly
  // one parent. "object" is implicit and always present.
  std::vector<TypedName> types; // name + parent type
  std::vector<Predicate> predicates;
  std::vector<FluentDecl> fluents;
  std::vector<TypedName> constants;
  std::vector<ActionSchema> actions;

  bool has_type(const std::string& t) const;
  /// Reflexive subtype test following parent links up to "object".
  bool is_subtype(const std::string& t, const std::string& ancestor) const;
  const Predicate* find_predicate(const std::string& name) const;
  const FluentDecl* find_fluent(const std::string& name) const;
  const ActionSchema* find_action(const std::string& name) const;
  const TypedName* find_constant(const std::string& name) const;
  bool has_positive_costs() const;

  // Built by the parser (or rebuild_index() after manual construction).
  void rebuild_index();

 private:
  std::unordered_map<std::string, std::string> parent_;
  std::unordered_map<std::string, size_t> pred_index_;
  std::unordered_map<std::string, size_t> fluent_index_;
  std::unordered_map<std::string, size_t> action_index_;
  std::unordered_map<std::string, size_t> constant_index_;
};

/// Ground numeric initialisation, e.g. (= (database-cost database1) 1).
struct FluentAssignment {
  std::string fluent;
  std::vector<std::string> args;
  std::int64_t value = 0;

  std::string str() const;
  friend bool operator==(const FluentAssignment&, const FluentAssignment&) = default;
  friend auto operator<=>(const FluentAssignment&, const FluentAssignment&) = default;
};

struct Problem {
  std::string name;
  std::string domain_name;
  std::vector<TypedName> objects;
  std::vector<Atom> init;
  std::vector<FluentAssignment> init_fluents;
  std::vector<Literal> goal;
  bool minimize_total_cost = false;

  const TypedName* find_object(const std::string& name) const;
};

/// Structural equality up to ordering of objects, init literals, fluent
/// assignments and goal conjuncts.
bool equivalent(const Problem& a, const Problem& b);

std::string to_lower(std::string s);

}  // namespace planx::pddl

#endif  // PLANX_PDDL_MODEL_HPP
