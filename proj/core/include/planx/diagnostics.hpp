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

#ifndef PLANX_DIAGNOSTICS_HPP
#define PLANX_DIAGNOSTICS_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace planx {

/// One parse or validation finding, printable as `file:line:col: message`.
struct Diagnostic {
  std::string file;
  int line = 0;
  int col = 0;
  std::string message;

  std::string str() const {
    std::ostringstream os;
    os << (file.empty() ? std::string("<input>") : file) << ':' << line << ':'
       << col << ": " << message;
    return os.str();
  }
};

inline std::string join_diagnostics(const std::vector<Diagnostic>& diags) {
  std::ostringstream os;
  for (size_t i = 0; i < diags.size(); ++i) {
    if (i > 0) os << '\n';
    os << diags[i].str();
  }
  return os.str();
}

/// Either a value or a non-empty diagnostic list.
template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  T& operator*() { return *value; }
  const T* operator->() const { return &*value; }
  T* operator->() { return &*value; }
};

}  // namespace planx

#endif  // PLANX_DIAGNOSTICS_HPP
