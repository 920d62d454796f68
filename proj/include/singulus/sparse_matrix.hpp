#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace singulus::la {

struct Entry {
  std::size_t row;
  std::size_t col;
  mpq_class value;
};

/// Sparse matrix with exact rational entries, stored column by column.
///
/// No zero is ever stored and each (row, col) occurs at most once. A matrix
/// produced by reduce_mod carries its modulus and then only holds integers
/// in [0, p).
class SparseMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, mpq_class>>;  // sorted by row

  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Throws std::out_of_range for bad indices and std::invalid_argument for
  /// duplicate positions. Zero values are dropped.
  static SparseMatrix from_entries(std::size_t rows, std::size_t cols, std::span<const Entry> entries);
  /// Row-major dense input, convenient for small literals.
  static SparseMatrix from_dense(const std::vector<std::vector<mpq_class>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  std::optional<std::uint64_t> modulus() const { return modulus_; }

  const Column& column(std::size_t c) const { return columns_.at(c); }
  mpq_class at(std::size_t r, std::size_t c) const;
  /// Sets an entry; setting zero removes it.
  void set(std::size_t r, std::size_t c, const mpq_class& value);

  /// Entries in column-major order.
  std::vector<Entry> entries() const;

  /// Coordinate text dump, one `row col numerator/denominator` per line.
  void dump(std::ostream& out) const;

 private:
  friend SparseMatrix reduce_mod(const SparseMatrix& m, std::uint64_t p);

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Column> columns_;
  std::optional<std::uint64_t> modulus_;
};

/// Entrywise image in Z/p; entries that become zero are dropped.
/// Throws BadPrimeError if p divides a denominator.
SparseMatrix reduce_mod(const SparseMatrix& m, std::uint64_t p);

struct RankCertificate {
  std::size_t rank = 0;
  /// Empty for a rank over the rationals.
  std::optional<std::uint64_t> modulus;
  /// Sorted; the pivot columns form a basis of the column space.
  std::vector<std::size_t> pivot_columns;
};

/// Rank over Z/p by sparse elimination with Markowitz pivot selection
/// (ties broken by lowest column, then lowest row). p may be any prime
/// below 2^63.
RankCertificate rank_mod_p(const SparseMatrix& m, std::uint64_t p);

/// cols - rank over Z/p.
std::size_t kernel_dim(const SparseMatrix& m, std::uint64_t p);

/// Exact rank over Q by fraction-free (Bareiss) elimination.
RankCertificate rank_rational(const SparseMatrix& m);

/// Rank over Q via the modular route: ranks modulo every given prime, and
/// if they disagree (or a prime is bad) the rational elimination decides.
RankCertificate rank_certified(const SparseMatrix& m, std::span<const std::uint64_t> primes);

}  // namespace singulus::la
