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

#include "planx/runtime/executors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "planx/runtime/decision_tree.hpp"
#include "planx/runtime/filter.hpp"

namespace planx::runtime {
namespace {

using Args = std::vector<std::string>;

std::string str_value(const Record& record) {
  if (record.value.is_string()) return record.value.get<std::string>();
  return record.value.dump();
}

std::string path_of(const ExecutionState& state, const std::string& name) {
  const Record& record = state.at(name);
  if (!record.value.is_string() || record.value.get<std::string>().empty())
    throw ExecutionError("entry '" + name + "' holds no file path");
  std::string path = record.value.get<std::string>();
  if (path.rfind("./", 0) == 0) path = path.substr(2);
  return path;
}

Table table_of(const ExecutionState& state, const std::string& name) {
  auto table = Table::from_json(state.at(name).value);
  if (!table)
    throw ExecutionError("entry '" + name + "' does not hold a dataframe");
  return *table;
}

void put_table(ExecutionState& state, const std::string& name,
               const Table& table) {
  Record& record = state.at(name);
  record.value = table.to_json();
  record.extras["columns"] = table.columns;
}

bool holds_table(const ExecutionState& state, const std::string& name) {
  return state.has(name) && Table::is_table(state.at(name).value);
}

bool holds_string(const ExecutionState& state, const std::string& name) {
  return state.has(name) && state.at(name).value.is_string();
}

bool is_kind(const json& value, const char* kind) {
  return value.is_object() && value.value("__kind", "") == kind;
}

std::string column_entry_name(const std::string& column) {
  std::string name = column;
  std::replace(name.begin(), name.end(), ' ', '-');
  name += "_column";
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return name;
}

std::string stringify(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

Table apply_query_or_throw(const Table& table, const std::string& query_text) {
  auto query = FilterQuery::parse(query_text);
  if (!query.ok())
    throw ExecutionError("malformed query '" + query_text +
                         "': " + join_diagnostics(query.diagnostics));
  auto result = apply_query(table, *query);
  if (!result.ok())
    throw ExecutionError("query '" + query_text +
                         "' failed: " + join_diagnostics(result.diagnostics));
  return *result;
}

std::string complete_or_throw(ExecContext& context, const std::string& prompt) {
  if (context.backend == nullptr)
    throw ExecutionError("no completion backend configured");
  prompt::CompletionResult result = context.backend->complete(prompt);
  if (!result.ok) throw ExecutionError(result.error);
  return result.text;
}

bool outbox_has(const OfficeWorld& world, const char* kind,
                const std::string& name) {
  for (const json& entry : world.read_outbox())
    if (entry.value("kind", "") == kind && entry.value("name", "") == name)
      return true;
  return false;
}

// Shared by read-data and connect-api; mirrors the column bookkeeping of the
// dataframe loader: each column gains a state entry <column>_column.
void install_dataframe(ExecutionState& state, const std::string& entity,
                       const Table& table) {
  put_table(state, entity, table);
  for (const std::string& column : table.columns) {
    std::string entry = column_entry_name(column);
    if (!state.has(entry)) state.put(entry, {"column", column, {}});
  }
}

void register_data_actions(ExecutorRegistry& registry) {
  registry.add(
      "read-data",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         const std::string& data = args[1];
         Table table = ctx.world->read_table(path_of(state, args[2]));
         install_dataframe(state, data, table);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return holds_table(state, args[1]);
       }});

  registry.add(
      "connect-api",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         const Record& api = state.at(args[1]);
         std::string fixture = api.extras.value("fixture", "");
         if (fixture.empty()) fixture = "api/" + str_value(api) + ".csv";
         Table table = ctx.world->read_table(fixture);
         const std::string column = str_value(state.at(args[2]));
         const std::string needle = str_value(state.at(args[3]));
         auto index = table.column_index(column);
         if (!index)
           throw ExecutionError("api fixture has no column '" + column + "'");
         Table out;
         out.columns = table.columns;
         for (const auto& row : table.rows) {
           const Table::Cell& cell = row[*index];
           if (stringify(cell) == needle || (cell.is_string() && cell == needle))
             out.rows.push_back(row);
         }
         install_dataframe(state, args[4], out);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return holds_table(state, args[4]);
       }});

  auto read_document = [](const Args& args, ExecutionState& state,
                          ExecContext& ctx) {
    state.at(args[1]).value = ctx.world->read_text(path_of(state, args[2]));
  };
  auto document_read = [](const Args& args, const ExecutionState& state,
                          const OfficeWorld&) {
    return holds_string(state, args[1]);
  };
  registry.add("read-pdf", {read_document, document_read});
  registry.add("read-word", {read_document, document_read});

  auto save_document = [](const Args& args, ExecutionState& state,
                          ExecContext& ctx) {
    ctx.world->write_text(path_of(state, args[2]),
                          str_value(state.at(args[1])));
    if (ctx.artifacts) ctx.artifacts->push_back(path_of(state, args[2]));
  };
  auto document_saved = [](const Args& args, const ExecutionState& state,
                           const OfficeWorld& world) {
    return world.text_exists(path_of(state, args[2]));
  };
  registry.add("save-pdf", {save_document, document_saved});

  auto run_query = [](const Args& args, ExecutionState& state, ExecContext&) {
    const std::string query_text = str_value(state.at(args[1]));
    Table source = table_of(state, args[2]);
    put_table(state, args[3], apply_query_or_throw(source, query_text));
  };
  auto query_done = [](const Args& args, const ExecutionState& state,
                       const OfficeWorld&) {
    return holds_table(state, args[3]);
  };
  registry.add("query-data", {run_query, query_done});
  registry.add("query-data-basic", {run_query, query_done});
  registry.add("query-data-optimized", {run_query, query_done});

  registry.add(
      "extract-data",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         const Record& data_type = state.at(args[1]);
         Table table = table_of(state, args[2]);
         json extracted;
         if (data_type.type == "count") {
           extracted = static_cast<std::int64_t>(table.row_count());
         } else if (data_type.type == "value-counts") {
           json counts = json::object();
           if (!table.columns.empty())
             for (const auto& row : table.rows)
               counts[stringify(row[0])] =
                   counts.value(stringify(row[0]), 0) + 1;
           extracted = std::move(counts);
         } else if (data_type.type == "value") {
           if (!table.rows.empty() && !table.rows[0].empty())
             extracted = table.rows[0][0];
           else
             extracted = json();
         } else {
           extracted = static_cast<std::int64_t>(table.row_count());
         }
         state.at(args[3]).value = std::move(extracted);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return state.has(args[3]) && !state.at(args[3]).value.is_null();
       }});

  registry.add(
      "create-data",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         Table base = table_of(state, args[1]);
         Table out;
         out.columns = base.columns;
         std::vector<Table::Cell> row;
         const json& values = state.at(args[3]).value;
         if (values.is_array())
           for (const auto& v : values) row.push_back(v);
         row.resize(out.columns.size());
         out.rows.push_back(std::move(row));
         put_table(state, args[2], out);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         if (!holds_table(state, args[2])) return false;
         return Table::from_json(state.at(args[2]).value)->row_count() == 1;
       }});

  registry.add(
      "delete-data",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         Table base = table_of(state, args[1]);
         Table drop = table_of(state, args[2]);
         Table out;
         out.columns = base.columns;
         for (const auto& row : base.rows)
           if (std::find(drop.rows.begin(), drop.rows.end(), row) ==
               drop.rows.end())
             out.rows.push_back(row);
         put_table(state, args[3], out);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return holds_table(state, args[3]);
       }});

  // modify-data rewrites a column for the rows selected by a query-like
  // contents entry; add-value writes one cell of the first selected row.
  auto selected_rows = [](const Table& table, const ExecutionState& state,
                          const std::string& selector) -> std::vector<size_t> {
    std::vector<size_t> all(table.rows.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (!state.has(selector) || !state.at(selector).value.is_string())
      return all;
    auto query = FilterQuery::parse(str_value(state.at(selector)));
    if (!query.ok() || query->projection) return all;
    auto filtered = apply_query(table, *query);
    if (!filtered.ok()) return all;
    std::vector<size_t> picked;
    for (size_t i = 0; i < table.rows.size(); ++i)
      if (std::find(filtered->rows.begin(), filtered->rows.end(),
                    table.rows[i]) != filtered->rows.end())
        picked.push_back(i);
    return picked;
  };

  registry.add(
      "modify-data",
      {[selected_rows](const Args& args, ExecutionState& state, ExecContext&) {
         Table table = table_of(state, args[1]);
         const std::string column = str_value(state.at(args[3]));
         auto index = table.column_index(column);
         if (!index)
           throw ExecutionError("no column '" + column + "' to modify");
         const json replacement = state.at(args[4]).value;
         for (size_t r : selected_rows(table, state, args[2]))
           table.rows[r][*index] = replacement;
         put_table(state, args[5], table);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return holds_table(state, args[5]);
       }});

  registry.add(
      "add-value",
      {[selected_rows](const Args& args, ExecutionState& state, ExecContext&) {
         Table table = table_of(state, args[1]);
         const std::string column = str_value(state.at(args[3]));
         auto index = table.column_index(column);
         if (!index) throw ExecutionError("no column '" + column + "'");
         std::vector<size_t> rows = selected_rows(table, state, args[2]);
         if (rows.empty()) throw ExecutionError("no row matches the selector");
         table.rows[rows[0]][*index] = state.at(args[4]).value;
         put_table(state, args[5], table);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return holds_table(state, args[5]);
       }});

  registry.add(
      "modify-row",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         Table table = table_of(state, args[2]);
         const Record& row_record = state.at(args[1]);
         size_t index = row_record.extras.value("index", 0);
         if (index >= table.rows.size())
           throw ExecutionError("row index out of range");
         std::vector<Table::Cell> row;
         if (row_record.value.is_array())
           for (const auto& v : row_record.value) row.push_back(v);
         row.resize(table.columns.size());
         table.rows[index] = std::move(row);
         put_table(state, args[3], table);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return holds_table(state, args[3]);
       }});

  registry.add(
      "merge-data",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         Table a = table_of(state, args[1]);
         Table b = table_of(state, args[2]);
         Table out;
         out.columns = a.columns;
         for (const std::string& column : b.columns)
           if (!out.column_index(column)) out.columns.push_back(column);
         auto reshape = [&out](const Table& src) {
           std::vector<std::vector<Table::Cell>> rows;
           for (const auto& row : src.rows) {
             std::vector<Table::Cell> cells(out.columns.size());
             for (size_t i = 0; i < src.columns.size(); ++i) {
               auto index = out.column_index(src.columns[i]);
               if (index && i < row.size()) cells[*index] = row[i];
             }
             rows.push_back(std::move(cells));
           }
           return rows;
         };
         for (auto& row : reshape(a)) out.rows.push_back(std::move(row));
         for (auto& row : reshape(b)) out.rows.push_back(std::move(row));
         put_table(state, args[3], out);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return holds_table(state, args[3]);
       }});

  registry.add(
      "find-info",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         const std::string needle = str_value(state.at(args[1]));
         const std::string text = ctx.world->read_text(path_of(state, args[2]));
         std::string found;
         std::istringstream lines(text);
         std::string line;
         while (std::getline(lines, line)) {
           if (line.find(needle) != std::string::npos) {
             if (!found.empty()) found += '\n';
             found += line;
           }
         }
         state.at(args[3]).value = found;
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return holds_string(state, args[3]);
       }});

  registry.add(
      "save-data",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         const std::string path = path_of(state, args[2]);
         ctx.world->write_table(path, table_of(state, args[1]));
         if (ctx.artifacts) ctx.artifacts->push_back(path);
       },
       [](const Args& args, const ExecutionState& state,
          const OfficeWorld& world) {
         return world.exists(path_of(state, args[2]));
       }});

  registry.add(
      "save-text",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         const std::string path = path_of(state, args[2]);
         ctx.world->write_text(path, str_value(state.at(args[1])));
         if (ctx.artifacts) ctx.artifacts->push_back(path);
       },
       [](const Args& args, const ExecutionState& state,
          const OfficeWorld& world) {
         return world.text_exists(path_of(state, args[2]));
       }});

  registry.add(
      "match-items",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         Table base = ctx.world->read_table(path_of(state, args[1]));
         Table first = ctx.world->read_table(path_of(state, args[2]));
         Table second = ctx.world->read_table(path_of(state, args[3]));
         auto key_set = [](const Table& t) {
           std::vector<std::string> keys;
           for (const auto& row : t.rows)
             if (!row.empty()) keys.push_back(stringify(row[0]));
           return keys;
         };
         std::vector<std::string> in_first = key_set(first);
         std::vector<std::string> in_second = key_set(second);
         Table out;
         out.columns = base.columns;
         for (const auto& row : base.rows) {
           if (row.empty()) continue;
           std::string key = stringify(row[0]);
           bool matched =
               std::find(in_first.begin(), in_first.end(), key) !=
                   in_first.end() &&
               std::find(in_second.begin(), in_second.end(), key) !=
                   in_second.end();
           if (matched) out.rows.push_back(row);
         }
         put_table(state, args[4], out);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return holds_table(state, args[4]);
       }});
}

void register_presentation_actions(ExecutorRegistry& registry) {
  registry.add(
      "create-graph",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         Record& graph = state.at(args[1]);
         json chart;
         chart["__kind"] = "chart";
         chart["chart-type"] = graph.type;
         chart["name"] = graph.value.is_string() && !str_value(graph).empty()
                             ? str_value(graph)
                             : args[1];
         chart["reference-column"] = nullptr;
         chart["categories"] = json::array();
         chart["values"] = json::array();
         graph.value = std::move(chart);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return state.has(args[1]) && is_kind(state.at(args[1]).value, "chart");
       }});

  registry.add(
      "add-to-graph",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         Record& graph = state.at(args[2]);
         if (!is_kind(graph.value, "chart"))
           throw ExecutionError("entry '" + args[2] + "' is not a chart");
         Table values = table_of(state, args[1]);
         Table categories = table_of(state, args[4]);
         if (values.columns.empty() || categories.columns.empty())
           throw ExecutionError("chart source tables need columns");
         json vals = json::array();
         for (const auto& row : values.rows)
           vals.push_back(row.empty() ? Table::Cell{} : row[0]);
         json cats = json::array();
         for (const auto& row : categories.rows)
           cats.push_back(row.empty() ? Table::Cell{} : row[0]);
         graph.value["values"] = std::move(vals);
         graph.value["categories"] = std::move(cats);
         graph.value["reference-column"] = str_value(state.at(args[3]));
         graph.value["series-column"] = values.columns[0];
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         if (!state.has(args[2])) return false;
         const json& chart = state.at(args[2]).value;
         return is_kind(chart, "chart") && chart.contains("categories") &&
                chart.contains("values") &&
                chart["categories"].size() == chart["values"].size() &&
                !chart["reference-column"].is_null();
       }});

  registry.add(
      "create-presentation",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         Record& pres = state.at(args[1]);
         json value;
         value["__kind"] = "presentation";
         value["name"] = pres.value.is_string() && !str_value(pres).empty()
                             ? str_value(pres)
                             : args[1];
         value["slides"] = json::array();
         pres.value = std::move(value);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return state.has(args[1]) &&
                is_kind(state.at(args[1]).value, "presentation");
       }});

  registry.add(
      "create-slide",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         Record& pres = state.at(args[2]);
         if (!is_kind(pres.value, "presentation"))
           throw ExecutionError("entry '" + args[2] + "' is not a presentation");
         Record& slide = state.at(args[1]);
         json value;
         value["__kind"] = "slide";
         value["name"] = slide.value.is_string() && !str_value(slide).empty()
                             ? str_value(slide)
                             : args[1];
         value["title"] = str_value(state.at(args[3]));
         value["contents"] = json::array();
         slide.value = std::move(value);
         pres.value["slides"].push_back(args[1]);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         if (!state.has(args[1]) || !state.has(args[2])) return false;
         if (!is_kind(state.at(args[1]).value, "slide")) return false;
         const json& pres = state.at(args[2]).value;
         if (!is_kind(pres, "presentation")) return false;
         for (const auto& s : pres["slides"])
           if (s == args[1]) return true;
         return false;
       }});

  auto slide_of = [](ExecutionState& state, const std::string& name) -> json& {
    Record& slide = state.at(name);
    if (!is_kind(slide.value, "slide"))
      throw ExecutionError("entry '" + name + "' is not a slide");
    return slide.value;
  };

  auto add_graph_to_slide = [slide_of](const Args& args, ExecutionState& state,
                                       ExecContext&) {
    json item;
    item["kind"] = "chart";
    item["entity"] = args[1];
    slide_of(state, args[2])["contents"].push_back(std::move(item));
  };
  auto slide_has_chart = [](const Args& args, const ExecutionState& state,
                            const OfficeWorld&) {
    if (!state.has(args[2]) || !is_kind(state.at(args[2]).value, "slide"))
      return false;
    for (const auto& item : state.at(args[2]).value["contents"])
      if (item.value("kind", "") == "chart" &&
          item.value("entity", "") == args[1])
        return true;
    return false;
  };
  registry.add("add-to-slide", {add_graph_to_slide, slide_has_chart});
  registry.add("add-to-slide-basic", {add_graph_to_slide, slide_has_chart});

  registry.add(
      "add-text-to-slide",
      {[slide_of](const Args& args, ExecutionState& state, ExecContext&) {
         json item;
         item["kind"] = "text";
         item["text"] = str_value(state.at(args[1]));
         slide_of(state, args[2])["contents"].push_back(std::move(item));
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         if (!state.has(args[2]) || !is_kind(state.at(args[2]).value, "slide"))
           return false;
         for (const auto& item : state.at(args[2]).value["contents"])
           if (item.value("kind", "") == "text") return true;
         return false;
       }});

  registry.add(
      "add-table-to-slide",
      {[slide_of](const Args& args, ExecutionState& state, ExecContext&) {
         json item;
         item["kind"] = "table";
         item["entity"] = args[1];
         slide_of(state, args[2])["contents"].push_back(std::move(item));
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         if (!state.has(args[2]) || !is_kind(state.at(args[2]).value, "slide"))
           return false;
         for (const auto& item : state.at(args[2]).value["contents"])
           if (item.value("kind", "") == "table" &&
               item.value("entity", "") == args[1])
             return true;
         return false;
       }});

  registry.add(
      "contents-in-presentation",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         Record& pres = state.at(args[3]);
         if (!is_kind(pres.value, "presentation"))
           throw ExecutionError("entry '" + args[3] + "' is not a presentation");
         json link;
         link["graph"] = args[2];
         link["contents"] = state.at(args[1]).value;
         if (!pres.value.contains("linked-contents"))
           pres.value["linked-contents"] = json::array();
         pres.value["linked-contents"].push_back(std::move(link));
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         if (!state.has(args[3])) return false;
         const json& pres = state.at(args[3]).value;
         return is_kind(pres, "presentation") &&
                pres.contains("linked-contents") &&
                !pres["linked-contents"].empty();
       }});

  registry.add(
      "generate-presentation",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         const Record& pres = state.at(args[1]);
         if (!is_kind(pres.value, "presentation"))
           throw ExecutionError("entry '" + args[1] + "' is not a presentation");
         json output;
         output["name"] = pres.value["name"];
         output["slides"] = json::array();
         for (const auto& slide_entity : pres.value["slides"]) {
           const std::string slide_name = slide_entity.get<std::string>();
           const json& slide = state.at(slide_name).value;
           json rendered;
           rendered["title"] = slide.value("title", "");
           rendered["contents"] = json::array();
           for (const auto& item : slide["contents"]) {
             const std::string kind = item.value("kind", "");
             if (kind == "chart") {
               json chart = state.at(item["entity"].get<std::string>()).value;
               chart.erase("__kind");
               chart["kind"] = "chart";
               rendered["contents"].push_back(std::move(chart));
             } else if (kind == "table") {
               json table = state.at(item["entity"].get<std::string>()).value;
               json cell;
               cell["kind"] = "table";
               cell["columns"] = table.value("columns", json::array());
               cell["rows"] = table.value("rows", json::array());
               rendered["contents"].push_back(std::move(cell));
             } else {
               rendered["contents"].push_back(item);
             }
           }
           output["slides"].push_back(std::move(rendered));
         }
         if (pres.value.contains("linked-contents"))
           output["linked-contents"] = pres.value["linked-contents"];
         const std::string path = path_of(state, args[2]);
         ctx.world->write_presentation(path, output);
         if (ctx.artifacts) ctx.artifacts->push_back(path);
       },
       [](const Args& args, const ExecutionState& state,
          const OfficeWorld& world) {
         return world.exists(path_of(state, args[2]));
       }});
}

void register_calendar_actions(ExecutorRegistry& registry) {
  const std::vector<std::string> kAppointmentColumns = {
      "subject", "start", "hour", "year", "isrecurring"};

  registry.add(
      "read-appointments",
      {[kAppointmentColumns](const Args& args, ExecutionState& state,
                             ExecContext& ctx) {
         Table table;
         table.columns = kAppointmentColumns;
         for (const json& row : ctx.world->read_appointments()) {
           std::vector<Table::Cell> cells;
           for (const std::string& column : kAppointmentColumns)
             cells.push_back(row.value(column, json()));
           table.rows.push_back(std::move(cells));
         }
         put_table(state, args[2], table);
         state.at(args[1]).extras["count"] =
             static_cast<std::int64_t>(table.row_count());
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return holds_table(state, args[2]);
       }});

  registry.add(
      "find-free-slots",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         std::vector<bool> busy(24, false);
         for (const json& row : ctx.world->read_appointments()) {
           int hour = row.value("hour", -1);
           if (hour >= 0 && hour < 24) busy[static_cast<size_t>(hour)] = true;
         }
         Table table;
         table.columns = {"hour"};
         for (int hour = 8; hour <= 17; ++hour)
           if (!busy[static_cast<size_t>(hour)])
             table.rows.push_back({static_cast<std::int64_t>(hour)});
         put_table(state, args[2], table);
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return holds_table(state, args[2]);
       }});

  registry.add(
      "add-to-appointments",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         const Record& item = state.at(args[1]);
         json row = item.extras.is_object() ? item.extras : json::object();
         if (!row.contains("subject")) row["subject"] = str_value(item);
         row.erase("columns");
         std::vector<json> rows = ctx.world->read_appointments();
         rows.push_back(row);
         ctx.world->write_appointments(rows);
       },
       [](const Args& args, const ExecutionState& state,
          const OfficeWorld& world) {
         const Record& item = state.at(args[1]);
         std::string subject = item.extras.value("subject", str_value(item));
         for (const json& row : world.read_appointments())
           if (row.value("subject", "") == subject) return true;
         return false;
       }});
}

void register_learning_actions(ExecutorRegistry& registry) {
  registry.add(
      "learn-supervised",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         Table data = table_of(state, args[1]);
         const std::string target = str_value(state.at(args[3]));
         DecisionTreeClassifier tree = DecisionTreeClassifier::train(data, target);
         Record& model = state.at(args[4]);
         std::string name = model.value.is_string() && !str_value(model).empty()
                                ? str_value(model)
                                : args[4];
         json dump = tree.to_json();
         dump["name"] = name;
         ctx.world->save_model(name, dump);
         model.value = dump;
         model.extras["trained-on"] = target;
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return state.has(args[4]) && is_kind(state.at(args[4]).value, "model");
       }});

  registry.add(
      "predict-using-learned-model",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         const Record& model = state.at(args[3]);
         if (!is_kind(model.value, "model"))
           throw ExecutionError("entry '" + args[3] + "' holds no trained model");
         DecisionTreeClassifier tree =
             DecisionTreeClassifier::from_json(model.value);
         Table input = table_of(state, args[1]);
         put_table(state, args[4], tree.predict_table(input));
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         if (!holds_table(state, args[4])) return false;
         if (!state.has(args[3]) || !is_kind(state.at(args[3]).value, "model"))
           return false;
         const std::string target =
             state.at(args[3]).value.value("target", "");
         auto table = Table::from_json(state.at(args[4]).value);
         return table->column_index(target).has_value();
       }});
}

void register_communication_actions(ExecutorRegistry& registry) {
  registry.add(
      "create-response",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         state.at(args[1]).value = json::array();
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return state.has(args[1]) && state.at(args[1]).value.is_array();
       }});

  registry.add(
      "add-to-response",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         Record& response = state.at(args[2]);
         if (!response.value.is_array()) {
           json list = json::array();
           if (!response.value.is_null()) list.push_back(response.value);
           response.value = std::move(list);
         }
         json item;
         item["name"] = args[1];
         item["value"] = state.at(args[1]).value;
         response.value.push_back(std::move(item));
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         if (!state.has(args[2]) || !state.at(args[2]).value.is_array())
           return false;
         for (const auto& item : state.at(args[2]).value)
           if (item.is_object() && item.value("name", "") == args[1])
             return true;
         return false;
       }});

  registry.add(
      "send-response",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         json entry;
         entry["kind"] = "response";
         entry["name"] = args[1];
         entry["content"] = state.at(args[1]).value;
         ctx.world->append_outbox(entry);
       },
       [](const Args& args, const ExecutionState&, const OfficeWorld& world) {
         return outbox_has(world, "response", args[1]);
       }});

  registry.add(
      "send-response-email",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         const Record& email = state.at(args[2]);
         json entry;
         entry["kind"] = "email";
         entry["name"] = args[2];
         entry["to"] = email.extras.value("to", "");
         entry["subject"] = email.extras.value("subject", "");
         entry["body"] = state.at(args[1]).value;
         ctx.world->append_outbox(entry);
       },
       [](const Args& args, const ExecutionState&, const OfficeWorld& world) {
         return outbox_has(world, "email", args[2]);
       }});

  registry.add(
      "notify-email",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         const Record& email = state.at(args[1]);
         json entry;
         entry["kind"] = "notification";
         entry["name"] = args[1];
         entry["to"] = email.extras.value("to", "");
         entry["subject"] = email.extras.value("subject", "");
         entry["body"] = state.at(args[2]).value;
         ctx.world->append_outbox(entry);
       },
       [](const Args& args, const ExecutionState&, const OfficeWorld& world) {
         return outbox_has(world, "notification", args[1]);
       }});

  registry.add(
      "read-email",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         const json* found = nullptr;
         std::vector<json> inbox = ctx.world->read_inbox();
         for (const json& entry : inbox)
           if (entry.value("name", "") == args[1]) found = &entry;
         if (found == nullptr)
           throw ExecutionError("no inbox email named '" + args[1] + "'");
         state.at(args[2]).value = found->value("body", "");
         Record& email = state.at(args[1]);
         email.extras["from"] = found->value("from", "");
         email.extras["subject"] = found->value("subject", "");
         // Emails may carry follow-up goals; surface them for replanning.
         if (found->contains("goals") && (*found)["goals"].is_array())
           for (const auto& goal : (*found)["goals"])
             state.new_goals.push_back(goal.get<std::string>());
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return holds_string(state, args[2]);
       }});

  registry.add(
      "reply-email",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         json entry;
         entry["kind"] = "reply";
         entry["name"] = args[1];
         entry["in-reply-to"] = args[1];
         entry["body"] = state.at(args[2]).value;
         ctx.world->append_outbox(entry);
       },
       [](const Args& args, const ExecutionState&, const OfficeWorld& world) {
         return outbox_has(world, "reply", args[1]);
       }});

  registry.add(
      "parse-email",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         const json* found = nullptr;
         std::vector<json> inbox = ctx.world->read_inbox();
         for (const json& entry : inbox)
           if (entry.value("name", "") == args[1]) found = &entry;
         if (found == nullptr)
           throw ExecutionError("no inbox email named '" + args[1] + "'");
         Record& email = state.at(args[1]);
         email.extras["from"] = found->value("from", "");
         email.extras["to"] = found->value("to", "");
         email.extras["subject"] = found->value("subject", "");
         email.extras["parsed"] = true;
       },
       [](const Args& args, const ExecutionState& state, const OfficeWorld&) {
         return state.has(args[1]) &&
                state.at(args[1]).extras.value("parsed", false);
       }});
}

void register_llm_actions(ExecutorRegistry& registry) {
  auto llm_monitor_for = [](size_t out_index) {
    return [out_index](const Args& args, const ExecutionState& state,
                       const OfficeWorld&) {
      return holds_string(state, args[out_index]);
    };
  };

  registry.add(
      "explain",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         state.at(args[2]).value = complete_or_throw(
             ctx, "Explain the following contents:\n" +
                      stringify(state.at(args[1]).value));
       },
       llm_monitor_for(2)});

  registry.add(
      "translate",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         state.at(args[3]).value = complete_or_throw(
             ctx, "Translate the following contents into " +
                      str_value(state.at(args[2])) + ":\n" +
                      stringify(state.at(args[1]).value));
       },
       llm_monitor_for(3)});

  registry.add(
      "summarize",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         state.at(args[2]).value = complete_or_throw(
             ctx, "Summarize the following contents:\n" +
                      stringify(state.at(args[1]).value));
       },
       llm_monitor_for(2)});

  registry.add(
      "ask-llm",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         state.at(args[2]).value =
             complete_or_throw(ctx, str_value(state.at(args[1])));
       },
       llm_monitor_for(2)});

  registry.add(
      "search-web",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         json fixtures = ctx.world->read_json("websearch.json");
         const std::string query = str_value(state.at(args[1]));
         if (!fixtures.contains(query))
           throw ExecutionError("no search fixture for '" + query + "'");
         state.at(args[2]).value = fixtures[query];
       },
       llm_monitor_for(2)});

  registry.add(
      "deep-research",
      {[](const Args& args, ExecutionState& state, ExecContext& ctx) {
         json fixtures = ctx.world->read_json("research.json");
         const std::string key =
             str_value(state.at(args[1])) + "|" + str_value(state.at(args[2]));
         if (!fixtures.contains(key))
           throw ExecutionError("no research fixture for '" + key + "'");
         state.at(args[3]).value = fixtures[key];
       },
       llm_monitor_for(3)});

  registry.add(
      "merge-answer",
      {[](const Args& args, ExecutionState& state, ExecContext&) {
         state.at(args[3]).value = stringify(state.at(args[1]).value) + "\n" +
                                   stringify(state.at(args[2]).value);
       },
       llm_monitor_for(3)});
}

}  // namespace

void register_office_executors(ExecutorRegistry& registry) {
  register_data_actions(registry);
  register_presentation_actions(registry);
  register_calendar_actions(registry);
  register_learning_actions(registry);
  register_communication_actions(registry);
  register_llm_actions(registry);
}

}  // namespace planx::runtime
