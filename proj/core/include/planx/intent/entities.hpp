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

#ifndef PLANX_INTENT_ENTITIES_HPP
#define PLANX_INTENT_ENTITIES_HPP

#include <regex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "planx/diagnostics.hpp"

namespace planx::intent {

/// Rule-based entity patterns, loaded from a JSON object
/// { "entity-type": "regex", ... }. Order in the file is match-priority order
/// for equal-length candidates.
class PatternSet {
 public:
  struct Entry {
    std::string type;
    std::string source;
    std::regex regex;
  };

  static ParseResult<PatternSet> load(const nlohmann::ordered_json& config);
  static ParseResult<PatternSet> load_file(const std::string& path);

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

struct EntityMatch {
  std::string text;
  size_t position = 0;

  friend bool operator==(const EntityMatch&, const EntityMatch&) = default;
};

/// Extraction result, grouped by entity type in pattern declaration order.
/// Types with no match are omitted; match lists preserve input order.
struct EntityMap {
  std::vector<std::pair<std::string, std::vector<EntityMatch>>> groups;

  bool empty() const { return groups.empty(); }
  const std::vector<EntityMatch>* find(const std::string& type) const;
  /// { "entity-type": ["surface", ...], ... }
  nlohmann::ordered_json to_json() const;
};

/// Scans left to right; at each position the longest match over all patterns
/// wins (declaration order breaks length ties), matches never overlap, and a
/// match must be delimited by non-alphanumeric characters or string edges.
EntityMap extract_entities(const std::string& request,
                           const PatternSet& patterns);

}  // namespace planx::intent

#endif  // PLANX_INTENT_ENTITIES_HPP
