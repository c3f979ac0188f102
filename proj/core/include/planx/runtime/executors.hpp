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

#ifndef PLANX_RUNTIME_EXECUTORS_HPP
#define PLANX_RUNTIME_EXECUTORS_HPP

#include "planx/runtime/execution.hpp"

namespace planx::runtime {

/// Registers the full office executor catalog (one executor per domain
/// action). Everything is simulated against the OfficeWorld; the LLM-backed
/// actions (explain, translate, summarize, ask-llm) go through the session's
/// completion backend.
void register_office_executors(ExecutorRegistry& registry);

}  // namespace planx::runtime

#endif  // PLANX_RUNTIME_EXECUTORS_HPP
