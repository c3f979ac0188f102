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

#include "planx/runtime/response.hpp"

#include <sstream>

#include "planx/runtime/table.hpp"

namespace planx::runtime {
namespace {

void render_value(std::ostringstream& os, const json& value,
                  const std::string& indent) {
  if (value.is_string()) {
    os << value.get<std::string>();
    return;
  }
  if (auto table = Table::from_json(value)) {
    os << "table with " << table->row_count() << " row"
       << (table->row_count() == 1 ? "" : "s") << " (";
    for (size_t i = 0; i < table->columns.size(); ++i)
      os << (i ? ", " : "") << table->columns[i];
    os << ")";
    constexpr size_t kMaxRows = 20;
    for (size_t r = 0; r < table->rows.size() && r < kMaxRows; ++r) {
      os << '\n' << indent << "  ";
      for (size_t c = 0; c < table->rows[r].size(); ++c) {
        const Table::Cell& cell = table->rows[r][c];
        os << (c ? " | " : "")
           << (cell.is_string() ? cell.get<std::string>() : cell.dump());
      }
    }
    if (table->rows.size() > kMaxRows)
      os << '\n' << indent << "  ... " << (table->rows.size() - kMaxRows)
         << " more rows";
    return;
  }
  os << value.dump();
}

}  // namespace

std::string build_response(const ExecutionReport& report) {
  std::ostringstream os;
  for (size_t i = 0; i < report.steps.size(); ++i) {
    const StepOutcome& step = report.steps[i];
    os << "step " << (i + 1) << ": " << step.action.str();
    if (step.applied && step.monitor_ok)
      os << " -> ok";
    else
      os << " -> FAILED (" << step.failure << ")";
    os << '\n';
  }
  for (const ReplanEvent& replan : report.replans)
    os << "replanned (" << replan.trigger << ")\n";

  switch (report.status) {
    case FinalStatus::Success:
      os << "status: success\n";
      break;
    case FinalStatus::Failed:
      os << "status: failed\n";
      break;
    case FinalStatus::Aborted:
      os << "status: aborted (" << report.abort_reason << ")\n";
      break;
  }

  if (!report.artifacts.empty()) {
    os << "artifacts:\n";
    for (const std::string& path : report.artifacts) os << "  " << path << '\n';
  }

  for (const json& sent : report.sent_responses) {
    os << "response " << sent.value("name", "") << ":\n";
    const json& content = sent.contains("content") ? sent["content"] : json();
    if (content.is_array()) {
      for (const auto& item : content) {
        if (item.is_object() && item.contains("name")) {
          os << "  " << item["name"].get<std::string>() << " = ";
          render_value(os, item.contains("value") ? item["value"] : json(),
                       "  ");
        } else {
          os << "  ";
          render_value(os, item, "  ");
        }
        os << '\n';
      }
    } else {
      os << "  ";
      render_value(os, content, "  ");
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace planx::runtime
