#pragma once

#include <string>
#include <variant>
#include <vector>

namespace rotlandau {

/// %.17g: round-trip exact for doubles.
std::string format_double(double x);

/// Column-oriented result table with deterministic CSV/JSON emission:
/// comma-separated, header row, LF line endings, floats at 17 significant
/// digits.  The preamble keys (phase branch, config echo) go into comment
/// lines in CSV and a "meta" object in JSON.
class Table {
 public:
  using Cell = std::variant<double, long long, std::string>;

  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void set_meta(const std::string& key, const std::string& value);
  void add_row(std::vector<Cell> cells);

  std::string to_csv() const;
  std::string to_json() const;
  std::string render(const std::string& format) const;  // "csv" or "json"

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t row_count() const { return rows_.size(); }

 private:
  std::vector<std::string> columns_;
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::vector<Cell>> rows_;
};

/// Write atomically: temp file in the same directory, then rename.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace rotlandau
