#include "rotlandau/table.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace rotlandau {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void Table::set_meta(const std::string& key, const std::string& value) {
  meta_.emplace_back(key, value);
}

void Table::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns_.size())
    throw std::invalid_argument("Table: row width does not match header");
  rows_.push_back(std::move(cells));
}

namespace {

std::string cell_text(const Table::Cell& c) {
  if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
  if (std::holds_alternative<long long>(c))
    return std::to_string(std::get<long long>(c));
  return std::get<std::string>(c);
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  for (const auto& [k, v] : meta_) out += "# " + k + "=" + v + "\n";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ",";
    out += columns_[i];
  }
  out += "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += cell_text(row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string Table::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta_) meta[k] = v;
  j["meta"] = std::move(meta);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      if (std::holds_alternative<double>(c))
        obj[columns_[i]] = std::get<double>(c);
      else if (std::holds_alternative<long long>(c))
        obj[columns_[i]] = std::get<long long>(c);
      else
        obj[columns_[i]] = std::get<std::string>(c);
    }
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string Table::render(const std::string& format) const {
  if (format == "csv") return to_csv();
  if (format == "json") return to_json();
  throw std::invalid_argument("Table: unknown format '" + format + "'");
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

}  // namespace rotlandau
