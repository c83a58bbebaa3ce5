#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace mtc::cli {

using Cell = std::variant<std::string, std::int64_t, double, bool>;

enum class RenderMode { text, json };

// Column-aligned text or a stable-schema JSON document
// {"title": ..., "columns": [...], "rows": [[...]...]}; deterministic bytes
// for identical inputs.
struct ReportDoc {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string render_report(const ReportDoc& doc, RenderMode mode);

}  // namespace mtc::cli
