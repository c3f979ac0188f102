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

#include "planx/pddl/printer.hpp"

#include <sstream>

namespace planx::pddl {

std::string render_predicate(const Predicate& pred) {
  std::ostringstream os;
  os << '(' << pred.name;
  for (const TypedName& p : pred.params) os << ' ' << p.name << " - " << p.type;
  os << ')';
  return os.str();
}

std::string render_problem(const Problem& problem) {
  std::ostringstream os;
  os << "(define (problem " << problem.name << ")\n";
  os << "  (:domain " << problem.domain_name << ")\n";
  os << "  (:objects";
  for (const TypedName& obj : problem.objects)
    os << "\n    " << obj.name << " - " << obj.type;
  os << ")\n";
  os << "  (:init";
  for (const Atom& atom : problem.init) os << "\n    " << atom.str();
  for (const FluentAssignment& fa : problem.init_fluents)
    os << "\n    " << fa.str();
  os << ")\n";
  os << "  (:goal (and";
  for (const Literal& lit : problem.goal) os << "\n    " << lit.str();
  os << "))\n";
  if (problem.minimize_total_cost)
    os << "  (:metric minimize (total-cost))\n";
  os << ")\n";
  return os.str();
}

}  // namespace planx::pddl
