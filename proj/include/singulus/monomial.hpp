#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace singulus::poly {

/// A monomial x0^e0 * ... * xn^en in n+1 variables.
///
/// The exponent vector always has one slot per variable, so two monomials
/// are only comparable when they live in the same ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  Monomial(std::initializer_list<std::uint32_t> exponents);

  static Monomial one(std::size_t num_vars);
  static Monomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  /// x_index * this
  Monomial times_variable(std::size_t index) const;

  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse-lexicographic comparison with x0 > x1 > ... > xn.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) < 0;
  }
};

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of degree k in x0..xn, strictly increasing in grevlex.
std::vector<Monomial> monomial_basis(std::size_t n, unsigned k);

/// binom(k + n, n) = dim S_k; zero for negative k.
mpz_class dim_graded_piece(std::size_t n, long k);

}  // namespace singulus::poly
