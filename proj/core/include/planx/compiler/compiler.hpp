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

#ifndef PLANX_COMPILER_COMPILER_HPP
#define PLANX_COMPILER_COMPILER_HPP

#include <string>

#include "planx/diagnostics.hpp"
#include "planx/intent/task_dictionary.hpp"
#include "planx/pddl/model.hpp"

namespace planx::compiler {

/// Translates a validated task dictionary into a PDDL problem:
///  - objects are the entity keys in dictionary order, typed by their `type`
///    field, plus an implicit `ai - ai-agent` when some action schema needs an
///    agent and no entity supplies one;
///  - init is the parsed init_state literals and numeric assignments, with
///    (= (total-cost) 0) added when the domain carries action costs;
///  - the goal is the parsed goals conjunction;
///  - the metric minimizes total-cost whenever any action has nonzero cost.
/// Entity values (paths, query strings) stay behind in the execution state;
/// only symbols cross into PDDL.
ParseResult<pddl::Problem> compile_problem(const intent::TaskDictionary& task,
                                           const pddl::Domain& domain,
                                           const std::string& name);

/// Name of the synthesized agent object.
inline constexpr char kImplicitAgent[] = "ai";

}  // namespace planx::compiler

#endif  // PLANX_COMPILER_COMPILER_HPP
