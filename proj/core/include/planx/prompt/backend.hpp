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

#ifndef PLANX_PROMPT_BACKEND_HPP
#define PLANX_PROMPT_BACKEND_HPP

#include <map>
#include <memory>
#include <string>

#include "planx/diagnostics.hpp"

namespace planx::prompt {

struct CompletionResult {
  bool ok = false;
  std::string text;
  std::string error;  // transport failure, timeout, missing mapping, ...
};

/// Pluggable completion interface. complete() is total: it returns text or an
/// error within the configured timeout, and never hangs. Implementations must
/// be safe to call from multiple threads (stateless or internally locked).
class CompletionBackend {
 public:
  virtual ~CompletionBackend() = default;
  virtual std::string id() const = 0;
  virtual CompletionResult complete(const std::string& prompt) = 0;
};

/// Offline backend backed by a JSON object mapping either the literal request
/// line or its fingerprint (FNV-1a 64, lowercase hex) to the canned reply.
/// The request is recovered from the prompt's trailing "Request:" line.
class ScriptedBackend : public CompletionBackend {
 public:
  static ParseResult<std::unique_ptr<ScriptedBackend>> load_file(
      const std::string& path);
  explicit ScriptedBackend(std::map<std::string, std::string> replies);

  std::string id() const override { return "scripted"; }
  CompletionResult complete(const std::string& prompt) override;

  static std::string fingerprint(const std::string& request);
  static std::string request_of_prompt(const std::string& prompt);

 private:
  std::map<std::string, std::string> replies_;
};

/// Generic HTTP backend: POST {"prompt": ...} to the endpoint, expect
/// {"text": ...}. Vendor-specific adapters are deployment configuration.
class HttpBackend : public CompletionBackend {
 public:
  HttpBackend(std::string endpoint, int timeout_ms);

  std::string id() const override { return "http"; }
  CompletionResult complete(const std::string& prompt) override;

 private:
  std::string endpoint_;
  int timeout_ms_;
};

}  // namespace planx::prompt

#endif  // PLANX_PROMPT_BACKEND_HPP
