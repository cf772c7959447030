#include "zzsim/table.hpp"

#include <stdexcept>

namespace zzsim {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("row width does not match column count");
  }
  rows.push_back(std::move(row));
}

int Table::column_index(const std::string& name) const {
  for (size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return int(i);
  }
  return -1;
}

bool Table::column_is_numeric(int index) const {
  for (const auto& row : rows) {
    if (!std::holds_alternative<double>(row[index])) return false;
  }
  return true;
}

double Table::number_at(int row, int col) const {
  return std::get<double>(rows.at(row).at(col));
}

}  // namespace zzsim
