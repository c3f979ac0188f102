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

#ifndef PLANX_PROMPT_LLM_OUTPUT_HPP
#define PLANX_PROMPT_LLM_OUTPUT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "planx/diagnostics.hpp"

namespace planx::prompt {

/// Extracts the first complete JSON object from a model reply, tolerating
/// surrounding prose, code fences, Python-style single-quoted strings and
/// True/False/None, and normalizes it to strict JSON. Key order is preserved.
ParseResult<nlohmann::ordered_json> parse_llm_output(const std::string& reply);

}  // namespace planx::prompt

#endif  // PLANX_PROMPT_LLM_OUTPUT_HPP
