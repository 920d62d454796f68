#include "singulus/squarefree.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "singulus/digest.hpp"

namespace singulus::poly {

namespace {

// Dense univariate polynomials over Q, lowest degree first, no trailing zeros.
using Univariate = std::vector<mpq_class>;

void trim(Univariate& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Univariate mul(const Univariate& a, const Univariate& b) {
  if (a.empty() || b.empty()) return {};
  Univariate r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Univariate derivative(const Univariate& p) {
  Univariate r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<unsigned long>(i));
  trim(r);
  return r;
}

Univariate remainder(Univariate a, const Univariate& b) {
  const mpq_class lead = b.back();
  while (a.size() >= b.size()) {
    const mpq_class q = a.back() / lead;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(Univariate a, Univariate b) {
  while (!b.empty()) {
    Univariate r = remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// g(t) = f(a + t b)
Univariate restrict_to_line(const Polynomial& f, const std::vector<mpz_class>& a,
                            const std::vector<mpz_class>& b) {
  Univariate g;
  for (const auto& [m, c] : f.terms()) {
    Univariate t{c};
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
      const Univariate lin{mpq_class(a[i]), mpq_class(b[i])};
      for (std::uint32_t e = 0; e < m[i]; ++e) t = mul(t, lin);
    }
    if (t.size() > g.size()) g.resize(t.size(), 0);
    for (std::size_t i = 0; i < t.size(); ++i) g[i] += t[i];
  }
  trim(g);
  return g;
}

}  // namespace

bool is_squarefree(const Polynomial& f, const SquarefreeOptions& options) {
  if (f.is_zero()) throw std::invalid_argument("squarefree check on the zero polynomial");
  const std::uint64_t seed =
      options.seed != 0 ? options.seed : seed_from("squarefree:" + f.to_string());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-options.coordinate_bound, options.coordinate_bound);

  unsigned done = 0;
  // A line lying inside the hypersurface restricts to zero; such draws are
  // discarded rather than counted.
  for (unsigned attempt = 0; done < options.trials && attempt < 16 * options.trials + 16; ++attempt) {
    std::vector<mpz_class> a(f.num_vars()), b(f.num_vars());
    for (auto& v : a) v = coord(rng);
    for (auto& v : b) v = coord(rng);
    const Univariate g = restrict_to_line(f, a, b);
    if (g.empty()) continue;
    ++done;
    if (g.size() <= 2) continue;  // degree <= 1 after restriction
    if (gcd_degree(g, derivative(g)) > 0) return false;
  }
  return true;
}

}  // namespace singulus::poly
