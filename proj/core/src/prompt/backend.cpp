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

#include "planx/prompt/backend.hpp"

#include <fstream>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace planx::prompt {

ScriptedBackend::ScriptedBackend(std::map<std::string, std::string> replies)
    : replies_(std::move(replies)) {}

ParseResult<std::unique_ptr<ScriptedBackend>> ScriptedBackend::load_file(
    const std::string& path) {
  ParseResult<std::unique_ptr<ScriptedBackend>> result;
  std::ifstream in(path);
  if (!in) {
    result.diagnostics.push_back({path, 0, 0, "cannot open scripted replies"});
    return result;
  }
  nlohmann::json config;
  try {
    in >> config;
  } catch (const std::exception& e) {
    result.diagnostics.push_back({path, 0, 0, e.what()});
    return result;
  }
  if (!config.is_object()) {
    result.diagnostics.push_back(
        {path, 0, 0, "scripted replies must be a JSON object"});
    return result;
  }
  std::map<std::string, std::string> replies;
  for (const auto& [key, value] : config.items()) {
    if (!value.is_string()) {
      result.diagnostics.push_back(
          {path, 0, 0, "reply for '" + key + "' must be a string"});
      continue;
    }
    replies[key] = value.get<std::string>();
  }
  if (!result.diagnostics.empty()) return result;
  result.value = std::make_unique<ScriptedBackend>(std::move(replies));
  return result;
}

std::string ScriptedBackend::fingerprint(const std::string& request) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : request) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string ScriptedBackend::request_of_prompt(const std::string& prompt) {
  // The builder writes the request as the final "Request: ..." line.
  const std::string marker = "Request: ";
  size_t pos = prompt.rfind(marker);
  if (pos == std::string::npos) return prompt;
  std::string request = prompt.substr(pos + marker.size());
  while (!request.empty() && (request.back() == '\n' || request.back() == '\r'))
    request.pop_back();
  return request;
}

CompletionResult ScriptedBackend::complete(const std::string& prompt) {
  const std::string request = request_of_prompt(prompt);
  auto it = replies_.find(request);
  if (it == replies_.end()) it = replies_.find(fingerprint(request));
  if (it == replies_.end()) {
    return {false, "", "no scripted reply for request '" + request + "'"};
  }
  return {true, it->second, ""};
}

HttpBackend::HttpBackend(std::string endpoint, int timeout_ms)
    : endpoint_(std::move(endpoint)), timeout_ms_(timeout_ms) {}

CompletionResult HttpBackend::complete(const std::string& prompt) {
  // Split endpoint into host part and path.
  std::string host = endpoint_;
  std::string path = "/";
  size_t scheme = host.find("://");
  size_t slash = host.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  if (slash != std::string::npos) {
    path = host.substr(slash);
    host = host.substr(0, slash);
  }

  httplib::Client client(host);
  client.set_connection_timeout(0, timeout_ms_ * 1000);
  client.set_read_timeout(0, timeout_ms_ * 1000);
  client.set_write_timeout(0, timeout_ms_ * 1000);

  nlohmann::json body{{"prompt", prompt}};
  httplib::Result res = client.Post(path, body.dump(), "application/json");
  if (!res) {
    return {false, "",
            "transport failure contacting " + endpoint_ + ": " +
                httplib::to_string(res.error())};
  }
  if (res->status != 200) {
    return {false, "",
            "backend returned HTTP " + std::to_string(res->status)};
  }
  try {
    nlohmann::json reply = nlohmann::json::parse(res->body);
    if (!reply.contains("text") || !reply["text"].is_string())
      return {false, "", "backend reply is missing a 'text' field"};
    return {true, reply["text"].get<std::string>(), ""};
  } catch (const std::exception& e) {
    return {false, "", std::string("malformed backend reply: ") + e.what()};
  }
}

}  // namespace planx::prompt
