#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace mtc::cli {

namespace {

std::string cell_text(const Cell& cell) {
  if (std::holds_alternative<std::string>(cell)) return std::get<std::string>(cell);
  if (std::holds_alternative<std::int64_t>(cell)) return std::to_string(std::get<std::int64_t>(cell));
  if (std::holds_alternative<bool>(cell)) return std::get<bool>(cell) ? "pass" : "FAIL";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", std::get<double>(cell));
  return buf;
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (std::holds_alternative<std::string>(cell)) return std::get<std::string>(cell);
  if (std::holds_alternative<std::int64_t>(cell)) return std::get<std::int64_t>(cell);
  if (std::holds_alternative<bool>(cell)) return std::get<bool>(cell);
  return std::get<double>(cell);
}

}  // namespace

std::string render_report(const ReportDoc& doc, RenderMode mode) {
  if (mode == RenderMode::json) {
    nlohmann::ordered_json out;
    out["title"] = doc.title;
    out["columns"] = doc.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : doc.rows) {
      auto r = nlohmann::ordered_json::array();
      for (const auto& cell : row) r.push_back(cell_json(cell));
      rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    return out.dump(2) + "\n";
  }

  std::vector<std::size_t> widths(doc.columns.size());
  for (std::size_t c = 0; c < doc.columns.size(); ++c) widths[c] = doc.columns[c].size();
  std::vector<std::vector<std::string>> texts;
  for (const auto& row : doc.rows) {
    std::vector<std::string> t;
    for (std::size_t c = 0; c < row.size(); ++c) {
      t.push_back(cell_text(row[c]));
      if (c < widths.size()) widths[c] = std::max(widths[c], t.back().size());
    }
    texts.push_back(std::move(t));
  }

  std::ostringstream os;
  if (!doc.title.empty()) os << doc.title << "\n";
  for (std::size_t c = 0; c < doc.columns.size(); ++c) {
    os << doc.columns[c];
    if (c + 1 < doc.columns.size())
      os << std::string(widths[c] - doc.columns[c].size() + 2, ' ');
  }
  os << "\n";
  for (const auto& row : texts) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(widths[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace mtc::cli
