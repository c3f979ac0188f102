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

#ifndef PLANX_PLANNER_PLAN_IO_HPP
#define PLANX_PLANNER_PLAN_IO_HPP

#include <string>
#include <string_view>

#include "planx/diagnostics.hpp"
#include "planx/planner/search.hpp"

namespace planx::planner {

/// Plan file format: one `(name arg1 arg2 ...)` per line and a final
/// `; cost = N` footer.
std::string render_plan(const Plan& plan);

/// Parses a plan file and resolves each line against the task's grounded
/// actions. Lines that name an unknown grounded action are diagnostics.
ParseResult<Plan> parse_plan(std::string_view text, const GroundedTask& task);

}  // namespace planx::planner

#endif  // PLANX_PLANNER_PLAN_IO_HPP
