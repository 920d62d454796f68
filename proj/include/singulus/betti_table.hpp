#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace singulus {

/// Graded Betti data of a Jacobian algebra M(f) = S/J_f for a degree d
/// hypersurface in P^n:
///
///     0 -> E_n -> ... -> E_1 -> S^{n+1}(1-d) -> S,
///     E_k = sum_i S(1 - d - d_{k,i}).
///
/// Column k (1-based) holds the shifts d_{k,1} <= ... <= d_{k,m_k}.
class BettiTable {
 public:
  using Column = std::vector<std::int64_t>;

  /// Requires n >= 2, d >= 3, exactly n columns and non-negative shifts
  /// (std::invalid_argument otherwise). Columns are sorted on entry.
  BettiTable(int n, int d, std::vector<Column> columns);

  int n() const { return n_; }
  int d() const { return d_; }
  /// 1 <= k <= n.
  const Column& column(int k) const;
  std::size_t m(int k) const { return column(k).size(); }
  const std::vector<Column>& columns() const { return columns_; }

  bool operator==(const BettiTable&) const = default;

 private:
  int n_;
  int d_;
  std::vector<Column> columns_;
};

}  // namespace singulus
