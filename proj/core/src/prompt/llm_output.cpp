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

#include "planx/prompt/llm_output.hpp"

#include <cctype>

namespace planx::prompt {
namespace {

// Rewrites a Python-ish object literal into strict JSON: single-quoted
// strings become double-quoted (with embedded quotes escaped) and bare
// True/False/None become true/false/null.
std::string normalize(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '"') {
      out.push_back('"');
      ++i;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < text.size()) {
          out.push_back(text[i]);
          out.push_back(text[i + 1]);
          i += 2;
          continue;
        }
        out.push_back(text[i]);
        ++i;
      }
      if (i < text.size()) {
        out.push_back('"');
        ++i;
      }
      continue;
    }
    if (c == '\'') {
      out.push_back('"');
      ++i;
      while (i < text.size() && text[i] != '\'') {
        if (text[i] == '\\' && i + 1 < text.size()) {
          if (text[i + 1] == '\'')
            out.push_back('\'');  // \' needs no escape inside double quotes
          else {
            out.push_back(text[i]);
            out.push_back(text[i + 1]);
          }
          i += 2;
          continue;
        }
        if (text[i] == '"') {
          out += "\\\"";
          ++i;
          continue;
        }
        out.push_back(text[i]);
        ++i;
      }
      if (i < text.size()) {
        out.push_back('"');
        ++i;
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < text.size() &&
             std::isalpha(static_cast<unsigned char>(text[i])))
        ++i;
      std::string word = text.substr(start, i - start);
      if (word == "True")
        out += "true";
      else if (word == "False")
        out += "false";
      else if (word == "None")
        out += "null";
      else
        out += word;
      continue;
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

}  // namespace

ParseResult<nlohmann::ordered_json> parse_llm_output(const std::string& reply) {
  ParseResult<nlohmann::ordered_json> result;

  size_t start = reply.find('{');
  if (start == std::string::npos) {
    result.diagnostics.push_back({"", 0, 0, "no JSON object found in reply"});
    return result;
  }

  // Balance braces, skipping over quoted spans.
  int depth = 0;
  char quote = 0;
  size_t end = std::string::npos;
  for (size_t i = start; i < reply.size(); ++i) {
    char c = reply[i];
    if (quote != 0) {
      if (c == '\\') {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      --depth;
      if (depth == 0) {
        end = i;
        break;
      }
    }
  }
  if (end == std::string::npos) {
    result.diagnostics.push_back({"", 0, 0, "unbalanced braces in reply"});
    return result;
  }

  std::string candidate = normalize(reply.substr(start, end - start + 1));
  try {
    result.value = nlohmann::ordered_json::parse(candidate);
  } catch (const std::exception& e) {
    result.diagnostics.push_back(
        {"", 0, 0, std::string("reply is not a JSON object: ") + e.what()});
  }
  return result;
}

}  // namespace planx::prompt
