#include "slabstack/io.hpp"

#include <charconv>
#include <cmath>

namespace slabstack {

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<Cell>& Table::add_row() {
  rows.emplace_back();
  rows.back().reserve(header.size());
  return rows.back();
}

namespace {

std::string cell_csv(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c.value)) return "";
  if (const auto* d = std::get_if<double>(&c.value)) return format_double(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c.value)) return std::to_string(*i);
  return std::get<std::string>(c.value);
}

}  // namespace

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i > 0) os << ',';
    os << table.header[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) os << ',';
      os << cell_csv(row[i]);
    }
    os << '\n';
  }
}

nlohmann::json table_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < table.header.size(); ++i) {
      const Cell& c = row[i];
      if (std::holds_alternative<std::monostate>(c.value)) {
        obj[table.header[i]] = nullptr;
      } else if (const auto* d = std::get_if<double>(&c.value)) {
        if (std::isfinite(*d)) {
          obj[table.header[i]] = *d;
        } else {
          obj[table.header[i]] = nullptr;
        }
      } else if (const auto* n = std::get_if<std::int64_t>(&c.value)) {
        obj[table.header[i]] = *n;
      } else {
        obj[table.header[i]] = std::get<std::string>(c.value);
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

}  // namespace slabstack
