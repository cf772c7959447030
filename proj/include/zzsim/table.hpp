#pragma once

#include <string>
#include <variant>
#include <vector>

namespace zzsim {

using Cell = std::variant<double, std::string>;

// Small rectangular result table; the unit of every column is part of its
// name (e.g. delta_mhz, zeta_numeric_mhz).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  int column_index(const std::string& name) const;  // -1 when absent
  bool column_is_numeric(int index) const;
  double number_at(int row, int col) const;
};

}  // namespace zzsim
