#pragma once

// Graded pieces of S and of M(f) = S/J_f over a field, with the normal form
// of every monomial. The basis of M(f)_k is the set of non-pivot monomials
// of the reduced echelon form of J_k, columns ordered by decreasing grevlex.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parallel.hpp"
#include "singulus/dense.hpp"
#include "singulus/monomial.hpp"
#include "singulus/polynomial.hpp"

namespace singulus::oracle::detail {

/// Monomial basis of S_k with an index, shared across fields.
struct MonomialPiece {
  std::vector<poly::Monomial> monomials;  // decreasing grevlex
  std::unordered_map<poly::Monomial, std::size_t, poly::MonomialHash> index;

  MonomialPiece(std::size_t n, unsigned k) : monomials(poly::monomial_basis(n, k)) {
    std::reverse(monomials.begin(), monomials.end());
    index.reserve(monomials.size());
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  }
};

/// The partials of f with coefficients mapped into the field.
template <class Field>
using FieldPartials =
    std::vector<std::vector<std::pair<poly::Monomial, typename Field::value_type>>>;

template <class Field>
FieldPartials<Field> reduce_partials(const poly::Polynomial& f, const Field& field) {
  FieldPartials<Field> out;
  for (std::size_t i = 0; i <= f.n(); ++i) {
    auto& terms = out.emplace_back();
    const auto fi = poly::partial(f, i);
    for (const auto& [m, c] : fi.terms()) {
      auto v = field.from_rational(c);
      if (!Field::is_zero(v)) terms.emplace_back(m, std::move(v));
    }
  }
  return out;
}

/// Matrix whose rows span J_k: m * f_i for every monomial m of degree
/// k - d + 1, written in the basis of S_k.
template <class Field>
la::DenseMatrix<Field> jacobian_piece(const FieldPartials<Field>& partials, const Field& field,
                                      std::size_t n, unsigned d, unsigned k,
                                      const MonomialPiece& target) {
  if (k + 1 < d) return la::DenseMatrix<Field>(field, 0, target.monomials.size());
  const auto multipliers = poly::monomial_basis(n, k + 1 - d);
  la::DenseMatrix<Field> m(field, multipliers.size() * partials.size(), target.monomials.size());
  std::size_t r = 0;
  for (const auto& mult : multipliers) {
    for (const auto& part : partials) {
      for (const auto& [mono, c] : part) m(r, target.index.at(mult * mono)) = c;
      ++r;
    }
  }
  return m;
}

/// M(f)_k with the data needed for normal forms.
template <class Field>
struct MilnorPiece {
  using value_type = typename Field::value_type;

  std::vector<std::size_t> basis;          // S_k columns that survive in M_k
  std::vector<std::ptrdiff_t> basis_slot;  // column -> slot in `basis`, or -1
  std::vector<std::ptrdiff_t> pivot_row;   // column -> echelon row, or -1
  std::optional<la::DenseMatrix<Field>> echelon;
  std::size_t rank = 0;

  std::size_t dim() const { return basis.size(); }

  /// Normal form of the column-c monomial as (slot, value) pairs.
  std::vector<std::pair<std::size_t, value_type>> normal_form(std::size_t c, const Field& field) const {
    std::vector<std::pair<std::size_t, value_type>> out;
    if (basis_slot[c] >= 0) {
      out.emplace_back(static_cast<std::size_t>(basis_slot[c]), field.one());
      return out;
    }
    const auto row = echelon->row(static_cast<std::size_t>(pivot_row[c]));
    for (std::size_t s = 0; s < basis.size(); ++s) {
      const auto& v = row[basis[s]];
      if (!Field::is_zero(v)) out.emplace_back(s, field.neg(v));
    }
    return out;
  }
};

template <class Field>
MilnorPiece<Field> milnor_piece(la::DenseMatrix<Field> jac, bool keep_echelon) {
  MilnorPiece<Field> piece;
  const auto pivots = jac.row_reduce(keep_echelon);
  piece.rank = pivots.size();
  piece.basis_slot.assign(jac.cols(), -1);
  piece.pivot_row.assign(jac.cols(), -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) piece.pivot_row[pivots[r]] = static_cast<std::ptrdiff_t>(r);
  for (std::size_t c = 0; c < jac.cols(); ++c) {
    if (piece.pivot_row[c] >= 0) continue;
    piece.basis_slot[c] = static_cast<std::ptrdiff_t>(piece.basis.size());
    piece.basis.push_back(c);
  }
  if (keep_echelon) piece.echelon.emplace(std::move(jac));
  return piece;
}

/// M(f)_0 .. M(f)_top over one field.
template <class Field>
class MilnorAlgebra {
 public:
  MilnorAlgebra(const poly::Polynomial& f, Field field, unsigned top, unsigned threads,
                const std::vector<MonomialPiece>& monomials)
      : field_(std::move(field)), n_(f.n()), monomials_(monomials) {
    const auto partials = reduce_partials(f, field_);
    const unsigned d = *f.degree();
    pieces_.resize(top + 1);
    parallel_for(top + 1, threads, [&](std::size_t k) {
      pieces_[k] = milnor_piece(
          jacobian_piece(partials, field_, n_, d, static_cast<unsigned>(k), monomials_[k]), true);
    });
  }

  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  unsigned top() const { return static_cast<unsigned>(pieces_.size() - 1); }
  const MilnorPiece<Field>& piece(unsigned k) const { return pieces_.at(k); }
  std::size_t dim(unsigned k) const { return pieces_.at(k).dim(); }

  /// Normal form in M_{k+1} of x_i times the slot-th basis monomial of M_k.
  auto times_variable(unsigned k, std::size_t slot, std::size_t i) const {
    const auto& mono = monomials_[k].monomials[pieces_[k].basis[slot]];
    const std::size_t col = monomials_[k + 1].index.at(mono.times_variable(i));
    return pieces_[k + 1].normal_form(col, field_);
  }

 private:
  Field field_;
  std::size_t n_;
  const std::vector<MonomialPiece>& monomials_;
  std::vector<MilnorPiece<Field>> pieces_;
};

}  // namespace singulus::oracle::detail
