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

#ifndef PLANX_PDDL_PARSER_HPP
#define PLANX_PDDL_PARSER_HPP

#include <string>
#include <string_view>

#include "planx/diagnostics.hpp"
#include "planx/pddl/model.hpp"

namespace planx::pddl {

/// Parses and validates a PDDL domain. Supported subset: :strips :typing
/// :action-costs :negative-preconditions. All identifiers are lowercased.
/// Returns the domain only if no diagnostic was produced.
ParseResult<Domain> parse_domain(std::string_view text,
                                 const std::string& filename = "");

/// Parses and validates a PDDL problem against an already validated domain.
ParseResult<Problem> parse_problem(std::string_view text, const Domain& domain,
                                   const std::string& filename = "");

/// Parses a literal sequence such as
///   "(in dataframe1 data-file1) (= (database-cost db1) 1) (not (sent r))"
/// as used by task-dictionary init_state/goals strings. Accepts an optional
/// outer (and ...) wrapper and normalizes it away.
struct LiteralList {
  std::vector<Literal> literals;
  std::vector<FluentAssignment> fluents;
};
ParseResult<LiteralList> parse_literal_list(std::string_view text,
                                            const std::string& context = "");

}  // namespace planx::pddl

#endif  // PLANX_PDDL_PARSER_HPP
