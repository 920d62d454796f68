#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "singulus/monomial.hpp"

namespace singulus::poly {

/// Polynomial in x0..xn with exact rational coefficients.
///
/// Terms are kept in decreasing grevlex order and no stored coefficient is
/// zero. The zero polynomial has no degree (`degree()` is empty), which
/// keeps it apart from nonzero constants.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpq_class, GrevlexGreater>;

  explicit Polynomial(std::size_t n);

  static Polynomial constant(std::size_t n, const mpq_class& c);
  static Polynomial variable(std::size_t n, std::size_t index);
  static Polynomial term(const Monomial& m, const mpq_class& c);

  /// Index of the last variable; the ring has n()+1 variables.
  std::size_t n() const { return n_; }
  std::size_t num_vars() const { return n_ + 1; }

  bool is_zero() const { return terms_.empty(); }
  std::optional<unsigned> degree() const;
  bool is_homogeneous() const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  mpq_class coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const mpq_class& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial pow(unsigned e) const;
  Polynomial scaled(const mpq_class& c) const;

  bool operator==(const Polynomial& other) const;

  /// Canonical text form, terms in decreasing monomial order, e.g.
  /// "x0^3 + 3*x0*x1 - 1/2*x2^3". The zero polynomial prints as "0".
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;

  std::size_t n_;
  Terms terms_;
};

/// d f / d x_i.
Polynomial partial(const Polynomial& f, std::size_t i);

}  // namespace singulus::poly
