#pragma once

#include "run_config.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pdmsusy::cli {

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

struct CommandResult {
  Table table;
  Json parameters = Json::object();
  Json summary = Json::object();
  bool verified = true;
  std::optional<Table> vectors;
};

/// Header row plus one line per row, 17 significant digits.
std::string render_csv(const Table& table);

/// Single object: command, parameters, summary, columns, rows.
std::string render_json(const std::string& command, const CommandResult& result);

/// Summary as "# key: value" lines (CSV mode sends these to stderr).
std::string render_summary_lines(const Json& summary);

}  // namespace pdmsusy::cli
