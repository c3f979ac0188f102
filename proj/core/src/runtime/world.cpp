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

#include "planx/runtime/world.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace planx::runtime {

namespace fs = std::filesystem;

OfficeWorld::OfficeWorld(fs::path root) : root_(std::move(root)) {
  fs::create_directories(root_);
}

fs::path OfficeWorld::resolve(const std::string& relative) const {
  fs::path rel(relative);
  if (rel.is_absolute())
    throw std::runtime_error("world paths must be relative: " + relative);
  for (const auto& part : rel)
    if (part == "..")
      throw std::runtime_error("world paths may not escape the root: " +
                               relative);
  // Leading "./" is common in request texts; normalize it away.
  return (root_ / rel).lexically_normal();
}

bool OfficeWorld::exists(const std::string& relative) const {
  return fs::exists(resolve(relative));
}

void OfficeWorld::remove(const std::string& relative) {
  fs::remove(resolve(relative));
}

Table OfficeWorld::read_table(const std::string& relative) const {
  fs::path path = resolve(relative);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("no such table file: " + relative);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Table::from_csv(buffer.str());
}

void OfficeWorld::write_table(const std::string& relative, const Table& table) {
  fs::path path = resolve(relative);
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write table file: " + relative);
  out << table.to_csv();
}

fs::path OfficeWorld::payload_path(const std::string& relative) const {
  fs::path direct = resolve(relative);
  if (fs::exists(direct)) return direct;
  fs::path payload = resolve(relative + ".txt");
  if (fs::exists(payload)) return payload;
  return direct;
}

std::string OfficeWorld::read_text(const std::string& relative) const {
  fs::path path = payload_path(relative);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("no such text file: " + relative);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void OfficeWorld::write_text(const std::string& relative,
                             const std::string& text) {
  // Virtual documents keep their payload in a .txt sidecar.
  std::string target = relative;
  fs::path rel(relative);
  std::string ext = rel.extension().string();
  if (ext == ".pdf" || ext == ".docx" || ext == ".doc") target += ".txt";
  fs::path path = resolve(target);
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write text file: " + relative);
  out << text;
}

bool OfficeWorld::text_exists(const std::string& relative) const {
  return fs::exists(payload_path(relative));
}

std::vector<OfficeWorld::json> OfficeWorld::read_appointments() const {
  if (!exists("appointments.json")) return {};
  json data = read_json("appointments.json");
  std::vector<json> rows;
  if (data.is_array())
    for (const auto& row : data) rows.push_back(row);
  return rows;
}

void OfficeWorld::write_appointments(const std::vector<json>& rows) {
  json data = json::array();
  for (const json& row : rows) data.push_back(row);
  write_json("appointments.json", data);
}

namespace {

std::vector<OfficeWorld::json> read_jsonl(const fs::path& path) {
  std::vector<OfficeWorld::json> entries;
  std::ifstream in(path);
  if (!in) return entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    entries.push_back(OfficeWorld::json::parse(line));
  }
  return entries;
}

}  // namespace

std::vector<OfficeWorld::json> OfficeWorld::read_outbox() const {
  return read_jsonl(root_ / "outbox.jsonl");
}

void OfficeWorld::append_outbox(const json& entry) {
  std::ofstream out(root_ / "outbox.jsonl", std::ios::app);
  if (!out) throw std::runtime_error("cannot append to outbox");
  out << entry.dump() << '\n';
}

std::vector<OfficeWorld::json> OfficeWorld::read_inbox() const {
  return read_jsonl(root_ / "inbox.jsonl");
}

void OfficeWorld::write_presentation(const std::string& relative,
                                     const json& content) {
  write_json(relative, content);
}

OfficeWorld::json OfficeWorld::read_presentation(
    const std::string& relative) const {
  return read_json(relative);
}

void OfficeWorld::save_model(const std::string& name, const json& model) {
  write_json("models/" + name + ".json", model);
}

OfficeWorld::json OfficeWorld::load_model(const std::string& name) const {
  return read_json("models/" + name + ".json");
}

bool OfficeWorld::has_model(const std::string& name) const {
  return exists("models/" + name + ".json");
}

OfficeWorld::json OfficeWorld::read_json(const std::string& relative) const {
  std::ifstream in(resolve(relative));
  if (!in) throw std::runtime_error("no such file: " + relative);
  json value;
  in >> value;
  return value;
}

void OfficeWorld::write_json(const std::string& relative, const json& value) {
  fs::path path = resolve(relative);
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + relative);
  out << value.dump(2) << '\n';
}

void OfficeWorld::snapshot_to(const fs::path& dir) const {
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::copy(root_, dir, fs::copy_options::recursive);
}

void OfficeWorld::restore_from(const fs::path& dir) {
  fs::remove_all(root_);
  fs::create_directories(root_);
  fs::copy(dir, root_, fs::copy_options::recursive);
}

}  // namespace planx::runtime
