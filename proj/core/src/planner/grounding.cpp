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

#include "planx/planner/grounding.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace planx::planner {
namespace {

using pddl::ActionSchema;
using pddl::Atom;
using pddl::CostTerm;
using pddl::Domain;
using pddl::Problem;
using pddl::TypedName;

struct Candidate {
  const ActionSchema* schema;
  std::vector<std::string> args;
  std::int64_t cost;
  std::vector<std::string> pre_pos;
  std::vector<std::string> pre_neg;
  std::vector<std::string> add;
  std::vector<std::string> del;
};

std::string ground_atom(const Atom& atom,
                        const std::unordered_map<std::string, std::string>& binding) {
  std::string out = "(" + atom.pred;
  for (const std::string& arg : atom.args) {
    out += ' ';
    if (!arg.empty() && arg.front() == '?') {
      out += binding.at(arg);
    } else {
      out += arg;  // domain constant used directly in the schema
    }
  }
  out += ')';
  return out;
}

}  // namespace

std::string GroundedAction::str() const {
  std::string out = "(" + schema;
  for (const std::string& a : args) out += ' ' + a;
  out += ')';
  return out;
}

GroundedTask ground(const Domain& domain, const Problem& problem) {
  // Candidate objects per schema parameter type, in declaration order
  // (constants first, then problem objects) for reproducible enumeration.
  std::vector<TypedName> universe_objects = domain.constants;
  universe_objects.insert(universe_objects.end(), problem.objects.begin(),
                          problem.objects.end());

  std::map<std::pair<std::string, std::vector<std::string>>, std::int64_t>
      fluent_values;
  for (const pddl::FluentAssignment& fa : problem.init_fluents)
    fluent_values[{fa.fluent, fa.args}] = fa.value;

  std::vector<Candidate> candidates;
  for (const ActionSchema& schema : domain.actions) {
    std::vector<std::vector<const TypedName*>> options(schema.params.size());
    bool instantiable = true;
    for (size_t i = 0; i < schema.params.size(); ++i) {
      for (const TypedName& obj : universe_objects)
        if (domain.is_subtype(obj.type, schema.params[i].type))
          options[i].push_back(&obj);
      if (options[i].empty()) instantiable = false;
    }
    if (!instantiable) continue;

    std::vector<size_t> pick(schema.params.size(), 0);
    while (true) {
      std::unordered_map<std::string, std::string> binding;
      for (size_t i = 0; i < schema.params.size(); ++i)
        binding[schema.params[i].name] = options[i][pick[i]]->name;

      Candidate cand;
      cand.schema = &schema;
      for (size_t i = 0; i < schema.params.size(); ++i)
        cand.args.push_back(options[i][pick[i]]->name);
      switch (schema.cost.kind) {
        case CostTerm::Kind::None:
          cand.cost = 0;
          break;
        case CostTerm::Kind::Constant:
          cand.cost = schema.cost.constant;
          break;
        case CostTerm::Kind::Fluent: {
          auto it = fluent_values.find(
              {schema.cost.fluent, {binding.at(schema.cost.fluent_arg)}});
          // Unassigned static cost fluents default to 1.
          cand.cost = it == fluent_values.end() ? 1 : it->second;
          break;
        }
      }
      for (const pddl::Literal& lit : schema.precondition) {
        (lit.negated ? cand.pre_neg : cand.pre_pos)
            .push_back(ground_atom(lit.atom, binding));
      }
      for (const Atom& a : schema.add_effects)
        cand.add.push_back(ground_atom(a, binding));
      for (const Atom& a : schema.delete_effects)
        cand.del.push_back(ground_atom(a, binding));
      candidates.push_back(std::move(cand));

      size_t level = schema.params.size();
      while (level > 0) {
        --level;
        if (++pick[level] < options[level].size()) break;
        pick[level] = 0;
        if (level == 0) goto schema_done;
      }
      if (schema.params.empty()) break;
    }
  schema_done:;
  }

  // Delete-relaxed reachability fixpoint over the candidates. Negative
  // preconditions are treated as satisfiable.
  std::unordered_set<std::string> reached;
  for (const Atom& a : problem.init) reached.insert(a.str());
  std::vector<bool> fired(candidates.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (fired[i]) continue;
      const Candidate& cand = candidates[i];
      bool applicable = std::all_of(
          cand.pre_pos.begin(), cand.pre_pos.end(),
          [&](const std::string& atom) { return reached.count(atom) > 0; });
      if (!applicable) continue;
      fired[i] = true;
      for (const std::string& atom : cand.add) {
        if (reached.insert(atom).second) changed = true;
      }
      changed = true;
    }
  }

  GroundedTask task;
  auto intern = [&task](const std::string& name) {
    auto it = task.atom_ids.find(name);
    if (it != task.atom_ids.end()) return it->second;
    int id = static_cast<int>(task.atom_names.size());
    task.atom_names.push_back(name);
    task.atom_ids.emplace(name, id);
    return id;
  };

  for (const Atom& a : problem.init) task.init.push_back(intern(a.str()));
  std::sort(task.init.begin(), task.init.end());
  task.init.erase(std::unique(task.init.begin(), task.init.end()),
                  task.init.end());

  for (size_t i = 0; i < candidates.size(); ++i) {
    if (!fired[i]) continue;
    Candidate& cand = candidates[i];
    GroundedAction action;
    action.schema = cand.schema->name;
    action.args = std::move(cand.args);
    action.cost = cand.cost;
    for (const std::string& atom : cand.pre_pos)
      action.pre_pos.push_back(intern(atom));
    for (const std::string& atom : cand.add) action.add.push_back(intern(atom));
    // Negative preconditions and deletes over atoms outside the reachable
    // universe are vacuous; keep only tracked atoms.
    for (const std::string& atom : cand.pre_neg)
      if (reached.count(atom)) action.pre_neg.push_back(intern(atom));
    for (const std::string& atom : cand.del)
      if (reached.count(atom)) action.del.push_back(intern(atom));
    for (auto* v :
         {&action.pre_pos, &action.pre_neg, &action.add, &action.del}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    task.actions.push_back(std::move(action));
  }

  for (const pddl::Literal& lit : problem.goal) {
    std::string name = lit.atom.str();
    if (lit.negated) {
      if (reached.count(name)) task.goal_neg.push_back(intern(name));
      // Unreachable atoms are always false: the negated goal is vacuous.
    } else {
      if (!reached.count(name)) {
        task.trivially_unsolvable = true;
        task.goal_pos.push_back(intern(name));
      } else {
        task.goal_pos.push_back(intern(name));
      }
    }
  }
  std::sort(task.goal_pos.begin(), task.goal_pos.end());
  task.goal_pos.erase(std::unique(task.goal_pos.begin(), task.goal_pos.end()),
                      task.goal_pos.end());
  std::sort(task.goal_neg.begin(), task.goal_neg.end());
  task.goal_neg.erase(std::unique(task.goal_neg.begin(), task.goal_neg.end()),
                      task.goal_neg.end());
  return task;
}

}  // namespace planx::planner
