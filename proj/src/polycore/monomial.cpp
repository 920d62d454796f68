#include "singulus/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace singulus::poly {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exps_(std::move(exponents)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0})) {}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(std::vector<std::uint32_t>(exponents)) {}

Monomial Monomial::one(std::size_t num_vars) {
  return Monomial(std::vector<std::uint32_t>(num_vars, 0));
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("variable index out of range");
  std::vector<std::uint32_t> e(num_vars, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.num_vars() != num_vars())
    throw std::invalid_argument("monomials from different rings");
  std::vector<std::uint32_t> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::times_variable(std::size_t index) const {
  Monomial m(*this);
  ++m.exps_.at(index);
  ++m.degree_;
  return m;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Same degree: the monomial with the smaller exponent in the last
  // differing variable is the larger one.
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL;
  return h;
}

namespace {

void enumerate(std::size_t var, unsigned remaining, std::vector<std::uint32_t>& cur,
               std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur[var] = e;
    enumerate(var + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n, unsigned k) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(n + 1, 0);
  enumerate(0, k, cur, out);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

mpz_class dim_graded_piece(std::size_t n, long k) {
  if (k < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k) + n, n);
  return r;
}

}  // namespace singulus::poly
