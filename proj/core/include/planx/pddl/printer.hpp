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

#ifndef PLANX_PDDL_PRINTER_HPP
#define PLANX_PDDL_PRINTER_HPP

#include <string>

#include "planx/pddl/model.hpp"

namespace planx::pddl {

/// Renders the problem as parseable PDDL text. Output is deterministic
/// (declaration order is preserved), so equal problems render byte-identically.
std::string render_problem(const Problem& problem);

/// Renders a predicate declaration as it appears in a :predicates block,
/// e.g. "(in ?c - contents ?c1 - contents)".
std::string render_predicate(const Predicate& pred);

}  // namespace planx::pddl

#endif  // PLANX_PDDL_PRINTER_HPP
