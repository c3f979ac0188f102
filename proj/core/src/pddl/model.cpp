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

#include "planx/pddl/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace planx::pddl {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

std::string Atom::str() const {
  std::ostringstream os;
  os << '(' << pred;
  for (const std::string& a : args) os << ' ' << a;
  os << ')';
  return os.str();
}

std::string Literal::str() const {
  if (!negated) return atom.str();
  return "(not " + atom.str() + ")";
}

std::string FluentAssignment::str() const {
  std::ostringstream os;
  os << "(= (" << fluent;
  for (const std::string& a : args) os << ' ' << a;
  os << ") " << value << ')';
  return os.str();
}

void Domain::rebuild_index() {
  parent_.clear();
  pred_index_.clear();
  fluent_index_.clear();
  action_index_.clear();
  constant_index_.clear();
  for (const TypedName& t : types) parent_[t.name] = t.type;
  for (size_t i = 0; i < predicates.size(); ++i)
    pred_index_.emplace(predicates[i].name, i);
  for (size_t i = 0; i < fluents.size(); ++i)
    fluent_index_.emplace(fluents[i].name, i);
  for (size_t i = 0; i < actions.size(); ++i)
    action_index_.emplace(actions[i].name, i);
  for (size_t i = 0; i < constants.size(); ++i)
    constant_index_.emplace(constants[i].name, i);
}

bool Domain::has_type(const std::string& t) const {
  return t == "object" || parent_.count(t) > 0;
}

bool Domain::is_subtype(const std::string& t, const std::string& ancestor) const {
  if (ancestor == "object") return has_type(t);
  std::string cur = t;
  size_t guard = parent_.size() + 2;
  while (guard-- > 0) {
    if (cur == ancestor) return true;
    auto it = parent_.find(cur);
    if (it == parent_.end()) return false;
    cur = it->second;
  }
  return false;
}

const Predicate* Domain::find_predicate(const std::string& name) const {
  auto it = pred_index_.find(name);
  return it == pred_index_.end() ? nullptr : &predicates[it->second];
}

const FluentDecl* Domain::find_fluent(const std::string& name) const {
  auto it = fluent_index_.find(name);
  return it == fluent_index_.end() ? nullptr : &fluents[it->second];
}

const ActionSchema* Domain::find_action(const std::string& name) const {
  auto it = action_index_.find(name);
  return it == action_index_.end() ? nullptr : &actions[it->second];
}

const TypedName* Domain::find_constant(const std::string& name) const {
  auto it = constant_index_.find(name);
  return it == constant_index_.end() ? nullptr : &constants[it->second];
}

bool Domain::has_positive_costs() const {
  return std::any_of(actions.begin(), actions.end(), [](const ActionSchema& a) {
    return a.cost.kind != CostTerm::Kind::None;
  });
}

const TypedName* Problem::find_object(const std::string& obj) const {
  for (const TypedName& o : objects)
    if (o.name == obj) return &o;
  return nullptr;
}

bool equivalent(const Problem& a, const Problem& b) {
  if (a.name != b.name || a.domain_name != b.domain_name ||
      a.minimize_total_cost != b.minimize_total_cost)
    return false;
  auto sorted = [](auto v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto key = [](const TypedName& t) { return t.name + " - " + t.type; };
  std::vector<std::string> oa, ob;
  for (const TypedName& t : a.objects) oa.push_back(key(t));
  for (const TypedName& t : b.objects) ob.push_back(key(t));
  return sorted(oa) == sorted(ob) && sorted(a.init) == sorted(b.init) &&
         sorted(a.init_fluents) == sorted(b.init_fluents) &&
         sorted(a.goal) == sorted(b.goal);
}

}  // namespace planx::pddl
