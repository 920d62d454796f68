#include "singulus/betti_table.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace singulus {

BettiTable::BettiTable(int n, int d, std::vector<Column> columns)
    : n_(n), d_(d), columns_(std::move(columns)) {
  if (n < 2) throw std::invalid_argument("Betti table needs n >= 2");
  if (d < 3) throw std::invalid_argument("Betti table needs d >= 3");
  if (columns_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("Betti table needs exactly n = " + std::to_string(n) + " columns");
  for (auto& col : columns_) {
    for (auto v : col)
      if (v < 0) throw std::invalid_argument("negative shift in Betti table");
    std::sort(col.begin(), col.end());
  }
}

const BettiTable::Column& BettiTable::column(int k) const {
  if (k < 1 || k > n_) throw std::out_of_range("Betti column index out of range");
  return columns_[static_cast<std::size_t>(k - 1)];
}

}  // namespace singulus
