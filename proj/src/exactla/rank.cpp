#include <algorithm>
#include <limits>
#include <stdexcept>

#include "singulus/modular.hpp"
#include "singulus/sparse_matrix.hpp"

namespace singulus::la {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, std::uint64_t>>;  // sorted by column

// row <- row - factor * pivot, entries mod p, zeros dropped.
SparseRow eliminate(const SparseRow& row, const SparseRow& pivot, std::uint64_t factor,
                    std::uint64_t p) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, sub_mod(0, mul_mod(factor, b->second, p), p));
      ++b;
    } else {
      const std::uint64_t v = sub_mod(a->second, mul_mod(factor, b->second, p), p);
      if (v != 0) out.emplace_back(a->first, v);
      ++a;
      ++b;
    }
  }
  return out;
}

const std::uint64_t* find_col(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

RankCertificate rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 63)) throw std::invalid_argument("modulus out of range");

  std::vector<SparseRow> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) {
      const std::uint64_t x = rational_mod(v, p);
      if (x != 0) rows[r].emplace_back(c, x);  // columns visited in order: rows stay sorted
    }

  std::vector<std::size_t> col_count(m.cols(), 0);
  std::vector<std::size_t> active;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) ++col_count[e.first];
    if (!rows[r].empty()) active.push_back(r);
  }

  RankCertificate cert;
  cert.modulus = p;
  while (!active.empty()) {
    // Markowitz cost (r_i - 1)(c_j - 1); ties go to the lowest column, then row.
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::size_t best_col = 0, best_row = 0;
    bool found = false;
    for (std::size_t r : active) {
      const std::size_t rlen = rows[r].size() - 1;
      for (const auto& [c, v] : rows[r]) {
        const std::size_t cost = rlen * (col_count[c] - 1);
        if (!found || cost < best_cost || (cost == best_cost && (c < best_col || (c == best_col && r < best_row)))) {
          best_cost = cost;
          best_col = c;
          best_row = r;
          found = true;
        }
      }
    }
    if (!found) break;

    const SparseRow pivot = std::move(rows[best_row]);
    rows[best_row].clear();
    for (const auto& e : pivot) --col_count[e.first];
    std::erase(active, best_row);
    const std::uint64_t pivot_inv = inv_mod(*find_col(pivot, best_col), p);

    std::vector<std::size_t> still_active;
    still_active.reserve(active.size());
    for (std::size_t r : active) {
      if (const std::uint64_t* v = find_col(rows[r], best_col)) {
        const std::uint64_t factor = mul_mod(*v, pivot_inv, p);
        for (const auto& e : rows[r]) --col_count[e.first];
        rows[r] = eliminate(rows[r], pivot, factor, p);
        for (const auto& e : rows[r]) ++col_count[e.first];
      }
      if (!rows[r].empty()) still_active.push_back(r);
    }
    active = std::move(still_active);
    cert.pivot_columns.push_back(best_col);
  }
  std::sort(cert.pivot_columns.begin(), cert.pivot_columns.end());
  cert.rank = cert.pivot_columns.size();
  return cert;
}

std::size_t kernel_dim(const SparseMatrix& m, std::uint64_t p) {
  return m.cols() - rank_mod_p(m, p).rank;
}

RankCertificate rank_rational(const SparseMatrix& m) {
  // Clear denominators row by row; scaling a row does not change the rank.
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols(), 0));
  std::vector<mpz_class> row_lcm(m.rows(), 1);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) mpz_lcm(row_lcm[r].get_mpz_t(), row_lcm[r].get_mpz_t(), v.get_den_mpz_t());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) a[r][c] = v.get_num() * (row_lcm[r] / v.get_den());

  RankCertificate cert;
  std::size_t k = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < m.cols() && k < m.rows(); ++c) {
    std::size_t piv = k;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[k], a[piv]);
    for (std::size_t i = k + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        mpz_class t = a[k][c] * a[i][j] - a[i][c] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[k][c];
    cert.pivot_columns.push_back(c);
    ++k;
  }
  cert.rank = k;
  return cert;
}

RankCertificate rank_certified(const SparseMatrix& m, std::span<const std::uint64_t> primes) {
  std::optional<RankCertificate> agreed;
  for (std::uint64_t p : primes) {
    RankCertificate c;
    try {
      c = rank_mod_p(m, p);
    } catch (const BadPrimeError&) {
      return rank_rational(m);
    }
    if (agreed && agreed->rank != c.rank) return rank_rational(m);
    if (!agreed) agreed = std::move(c);
  }
  return agreed ? *agreed : rank_rational(m);
}

}  // namespace singulus::la
