#include "singulus/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace singulus::poly {

Polynomial::Polynomial(std::size_t n) : n_(n) {}

Polynomial Polynomial::constant(std::size_t n, const mpq_class& c) {
  Polynomial p(n);
  p.add_term(Monomial::one(n + 1), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t index) {
  Polynomial p(n);
  p.add_term(Monomial::variable(n + 1, index), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const mpq_class& c) {
  if (m.num_vars() == 0) throw std::invalid_argument("monomial without variables");
  Polynomial p(m.num_vars() - 1);
  p.add_term(m, c);
  return p;
}

std::optional<unsigned> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  unsigned deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, static_cast<unsigned>(m.degree()));
  return deg;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto deg = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != deg) return false;
  return true;
}

mpq_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (m.num_vars() != num_vars()) throw std::invalid_argument("monomial from a different ring");
  mpq_class v = c;
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (other.n_ != n_) throw std::invalid_argument("polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  check_ring(other);
  Polynomial r(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
  *this = std::move(r);
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(n_, 1);
  Polynomial base(*this);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  Polynomial r(n_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return n_ == other.n_ && terms_ == other.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    const mpq_class mag = abs(c);
    bool wrote = false;
    if (mag != 1 || m.degree() == 0) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out << '*';
      out << 'x' << i;
      if (m[i] > 1) out << '^' << m[i];
      wrote = true;
    }
  }
  return out.str();
}

Polynomial partial(const Polynomial& f, std::size_t i) {
  if (i > f.n()) throw std::out_of_range("partial: variable index out of range");
  Polynomial r(f.n());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
    const auto power = e[i]--;
    r.add_term(Monomial(std::move(e)), c * power);
  }
  return r;
}

}  // namespace singulus::poly
