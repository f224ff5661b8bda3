#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace slabstack {

/// Locale-independent float formatting: 17 significant digits, '.' decimal
/// separator, stable across runs.
std::string format_double(double v);

/// One table cell. NaN numbers render as empty CSV fields / JSON nulls.
struct Cell {
  std::variant<std::monostate, double, std::int64_t, std::string> value;

  static Cell num(double v) { return Cell{v}; }
  static Cell integer(std::int64_t v) { return Cell{v}; }
  static Cell text(std::string v) { return Cell{std::move(v)}; }
  static Cell empty() { return Cell{}; }
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  std::vector<Cell>& add_row();
};

/// UTF-8 CSV with a header row.
void write_csv(const Table& table, std::ostream& os);

/// The same table as a JSON array of row objects.
nlohmann::json table_json(const Table& table);

}  // namespace slabstack
