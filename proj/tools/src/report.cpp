#include "report.hpp"

#include "pdmsusy/errors.hpp"

#include <cmath>
#include <cstdio>

namespace pdmsusy::cli {

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw InvalidArgument("row width does not match the column set");
  for (double v : row)
    if (!std::isfinite(v)) throw DomainError(row.front(), "non-finite value in report row");
  rows.push_back(std::move(row));
}

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  char buf[40];
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const std::string& command, const CommandResult& result) {
  Json doc;
  doc["command"] = command;
  doc["parameters"] = result.parameters;
  doc["summary"] = result.summary;
  doc["columns"] = result.table.columns;
  doc["rows"] = result.table.rows;
  return doc.dump(2) + "\n";
}

std::string render_summary_lines(const Json& summary) {
  std::string out;
  for (const auto& [key, value] : summary.items()) out += "# " + key + ": " + value.dump() + "\n";
  return out;
}

}  // namespace pdmsusy::cli
