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

#include "planx/intent/entities.hpp"

#include <cctype>
#include <fstream>

namespace planx::intent {

ParseResult<PatternSet> PatternSet::load(const nlohmann::ordered_json& config) {
  ParseResult<PatternSet> result;
  PatternSet set;
  if (!config.is_object()) {
    result.diagnostics.push_back(
        {"", 0, 0, "pattern file must be a JSON object of type -> regex"});
    return result;
  }
  for (const auto& [type, value] : config.items()) {
    if (!value.is_string()) {
      result.diagnostics.push_back(
          {"", 0, 0, "pattern for '" + type + "' must be a string"});
      continue;
    }
    Entry entry;
    entry.type = type;
    entry.source = value.get<std::string>();
    try {
      entry.regex = std::regex(entry.source);
    } catch (const std::regex_error& e) {
      result.diagnostics.push_back(
          {"", 0, 0, "invalid pattern for '" + type + "': " + e.what()});
      continue;
    }
    set.entries_.push_back(std::move(entry));
  }
  if (!result.diagnostics.empty()) return result;
  result.value = std::move(set);
  return result;
}

ParseResult<PatternSet> PatternSet::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult<PatternSet> result;
    result.diagnostics.push_back({path, 0, 0, "cannot open pattern file"});
    return result;
  }
  nlohmann::ordered_json config;
  try {
    in >> config;
  } catch (const std::exception& e) {
    ParseResult<PatternSet> result;
    result.diagnostics.push_back({path, 0, 0, e.what()});
    return result;
  }
  auto result = load(config);
  for (Diagnostic& d : result.diagnostics) d.file = path;
  return result;
}

const std::vector<EntityMatch>* EntityMap::find(const std::string& type) const {
  for (const auto& [name, matches] : groups)
    if (name == type) return &matches;
  return nullptr;
}

nlohmann::ordered_json EntityMap::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [name, matches] : groups) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const EntityMatch& m : matches) list.push_back(m.text);
    out[name] = std::move(list);
  }
  return out;
}

namespace {

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

EntityMap extract_entities(const std::string& request,
                           const PatternSet& patterns) {
  // (pattern index, match) pairs in input order; regrouped at the end.
  std::vector<std::pair<size_t, EntityMatch>> hits;
  size_t pos = 0;
  while (pos < request.size()) {
    if (pos > 0 && word_char(request[pos - 1])) {
      ++pos;  // not at a word boundary
      continue;
    }
    size_t best_len = 0;
    size_t best_pattern = 0;
    for (size_t pi = 0; pi < patterns.entries().size(); ++pi) {
      std::smatch m;
      auto begin = request.cbegin() + static_cast<std::ptrdiff_t>(pos);
      if (!std::regex_search(begin, request.cend(), m, patterns.entries()[pi].regex,
                             std::regex_constants::match_continuous))
        continue;
      size_t len = static_cast<size_t>(m.length(0));
      if (len == 0) continue;
      size_t end = pos + len;
      if (end < request.size() && word_char(request[end])) continue;
      if (len > best_len) {
        best_len = len;
        best_pattern = pi;
      }
    }
    if (best_len == 0) {
      ++pos;
      continue;
    }
    hits.push_back({best_pattern, {request.substr(pos, best_len), pos}});
    pos += best_len;
  }

  EntityMap map;
  for (size_t pi = 0; pi < patterns.entries().size(); ++pi) {
    std::vector<EntityMatch> matches;
    for (const auto& [pattern, match] : hits)
      if (pattern == pi) matches.push_back(match);
    if (!matches.empty())
      map.groups.push_back({patterns.entries()[pi].type, std::move(matches)});
  }
  return map;
}

}  // namespace planx::intent
