#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "singulus/modular.hpp"
#include "singulus/simd/kernels.hpp"

namespace singulus::la {

/// Z/p for a prime p < 2^31, with row operations routed through the
/// runtime-selected vector kernels.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p, const simd::KernelTable& kernels = simd::active_kernels());

  std::uint32_t modulus() const { return p_; }
  const simd::KernelTable& kernels() const { return *kernels_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  static bool is_zero(value_type v) { return v == 0; }
  value_type neg(value_type v) const { return v == 0 ? 0 : p_ - v; }
  value_type inv(value_type v) const { return static_cast<value_type>(inv_mod(v, p_)); }
  value_type from_rational(const mpq_class& q) const {
    return static_cast<value_type>(rational_mod(q, p_));
  }
  value_type add(value_type a, value_type b) const { return static_cast<value_type>(add_mod(a, b, p_)); }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>(mul_mod(a, b, p_)); }

  void axpy(std::span<value_type> dst, std::span<const value_type> src, value_type c) const {
    kernels_->axpy(dst.data(), src.data(), simd::make_mul_constant(c, p_), p_, dst.size());
  }
  void scale(std::span<value_type> row, value_type c) const {
    kernels_->scale(row.data(), simd::make_mul_constant(c, p_), p_, row.size());
  }

 private:
  std::uint32_t p_;
  const simd::KernelTable* kernels_;
};

/// Q with GMP rationals; the slow exact fallback.
class RationalField {
 public:
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  static bool is_zero(const value_type& v) { return v == 0; }
  value_type neg(const value_type& v) const { return -v; }
  value_type inv(const value_type& v) const { return 1 / v; }
  value_type from_rational(const mpq_class& q) const { return q; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }

  void axpy(std::span<value_type> dst, std::span<const value_type> src, const value_type& c) const {
    for (std::size_t i = 0; i < dst.size(); ++i)
      if (src[i] != 0) dst[i] += c * src[i];
  }
  void scale(std::span<value_type> row, const value_type& c) const {
    for (auto& v : row) v *= c;
  }
};

/// Row-major dense matrix over a field.
template <class Field>
class DenseMatrix {
 public:
  using value_type = typename Field::value_type;

  DenseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Gaussian elimination with the pivot in each column taken from the
  /// lowest available row. Returns the pivot columns (increasing). With
  /// `reduced`, rows [0, rank) end up in reduced row echelon form with unit
  /// pivots; otherwise only the rank and pivots are meaningful.
  std::vector<std::size_t> row_reduce(bool reduced);

  std::size_t rank() { return row_reduce(false).size(); }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = row(a);
    auto rb = row(b);
    std::swap_ranges(ra.begin(), ra.end(), rb.begin());
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <class Field>
std::vector<std::size_t> DenseMatrix<Field>::row_reduce(bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t piv = rank;
    while (piv < rows_ && Field::is_zero((*this)(piv, c))) ++piv;
    if (piv == rows_) continue;
    swap_rows(rank, piv);

    // Columns before c are zero in the pivot row, so only the tail moves.
    auto pivot_tail = row(rank).subspan(c);
    field_.scale(pivot_tail, field_.inv(pivot_tail[0]));
    const std::size_t first = reduced ? 0 : rank + 1;
    for (std::size_t r = first; r < rows_; ++r) {
      if (r == rank) continue;
      const value_type v = (*this)(r, c);
      if (Field::is_zero(v)) continue;
      field_.axpy(row(r).subspan(c), pivot_tail, field_.neg(v));
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace singulus::la
