#include "singulus/sparse_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "singulus/modular.hpp"

namespace singulus::la {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), columns_(cols) {}

SparseMatrix SparseMatrix::from_entries(std::size_t rows, std::size_t cols,
                                        std::span<const Entry> entries) {
  SparseMatrix m(rows, cols);
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw std::out_of_range("matrix entry index out of range");
    m.columns_[e.col].emplace_back(e.row, e.value);
  }
  for (auto& col : m.columns_) {
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < col.size(); ++i)
      if (col[i].first == col[i - 1].first) throw std::invalid_argument("duplicate matrix entry");
    std::erase_if(col, [](const auto& e) { return e.second == 0; });
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<mpq_class>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < ncols; ++c)
      if (rows[r][c] != 0) m.columns_[c].emplace_back(r, rows[r][c]);
  }
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

mpq_class SparseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_) throw std::out_of_range("row index out of range");
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::size_t row) { return e.first < row; });
  return (it != col.end() && it->first == r) ? it->second : mpq_class(0);
}

void SparseMatrix::set(std::size_t r, std::size_t c, const mpq_class& value) {
  if (r >= rows_) throw std::out_of_range("row index out of range");
  auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::size_t row) { return e.first < row; });
  const bool present = it != col.end() && it->first == r;
  if (value == 0) {
    if (present) col.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    col.insert(it, {r, value});
  }
}

std::vector<Entry> SparseMatrix::entries() const {
  std::vector<Entry> out;
  out.reserve(nnz());
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) out.push_back({r, c, v});
  return out;
}

void SparseMatrix::dump(std::ostream& out) const {
  out << "% " << rows_ << ' ' << cols_;
  if (modulus_) out << " mod " << *modulus_;
  out << '\n';
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c])
      out << r << ' ' << c << ' ' << v.get_num().get_str() << '/' << v.get_den().get_str() << '\n';
}

SparseMatrix reduce_mod(const SparseMatrix& m, std::uint64_t p) {
  SparseMatrix out(m.rows_, m.cols_);
  out.modulus_ = p;
  for (std::size_t c = 0; c < m.cols_; ++c) {
    for (const auto& [r, v] : m.columns_[c]) {
      const std::uint64_t x = rational_mod(v, p);
      if (x != 0) out.columns_[c].emplace_back(r, mpq_class(static_cast<unsigned long>(x)));
    }
  }
  return out;
}

}  // namespace singulus::la
