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

#ifndef PLANX_RUNTIME_WORLD_HPP
#define PLANX_RUNTIME_WORLD_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "planx/runtime/table.hpp"

namespace planx::runtime {

/// Simulated office environment rooted at a directory:
///   *.csv                  tables
///   *.txt, *.pdf.txt, *.docx.txt   text payloads of virtual documents
///   appointments.json      calendar rows (subject, start, hour, year,
///                          isrecurring)
///   inbox.jsonl/outbox.jsonl  one JSON email or response per line
///   *.pptx                 presentations (JSON container)
///   models/*.json          learned-model dumps
/// All mutations go through executors; snapshot/restore copies the tree.
class OfficeWorld {
 public:
  using json = nlohmann::ordered_json;

  explicit OfficeWorld(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  /// Joins a world-relative path, rejecting absolute paths and '..' escapes.
  std::filesystem::path resolve(const std::string& relative) const;

  bool exists(const std::string& relative) const;
  void remove(const std::string& relative);

  Table read_table(const std::string& relative) const;
  void write_table(const std::string& relative, const Table& table);

  /// Reads a text payload; for virtual documents ("report.pdf") the payload
  /// lives next to the name with a .txt suffix ("report.pdf.txt").
  std::string read_text(const std::string& relative) const;
  void write_text(const std::string& relative, const std::string& text);
  bool text_exists(const std::string& relative) const;

  std::vector<json> read_appointments() const;
  void write_appointments(const std::vector<json>& rows);

  std::vector<json> read_outbox() const;
  void append_outbox(const json& entry);
  std::vector<json> read_inbox() const;

  void write_presentation(const std::string& relative, const json& content);
  json read_presentation(const std::string& relative) const;

  void save_model(const std::string& name, const json& model);
  json load_model(const std::string& name) const;
  bool has_model(const std::string& name) const;

  json read_json(const std::string& relative) const;
  void write_json(const std::string& relative, const json& value);

  void snapshot_to(const std::filesystem::path& dir) const;
  void restore_from(const std::filesystem::path& dir);

 private:
  std::filesystem::path payload_path(const std::string& relative) const;

  std::filesystem::path root_;
};

}  // namespace planx::runtime

#endif  // PLANX_RUNTIME_WORLD_HPP
