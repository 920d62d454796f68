#include <stdexcept>

#include "singulus/monomial.hpp"
#include "singulus/rules.hpp"

namespace singulus::rules {

namespace {

mpz_class pow_z(long base, unsigned long e) {
  mpz_class r;
  const mpz_class b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class expected_sigma(const BettiTable& t, int j) {
  if (j == 0) return t.n();
  const mpz_class v = pow_z(t.d() - 1, static_cast<unsigned long>(j));
  return (j % 2 == 1) ? v : mpz_class(-v);
}

}  // namespace

mpz_class sigma(const BettiTable& table, int j) {
  if (j < 0 || j > table.n()) throw std::out_of_range("sigma index out of range");
  mpz_class total = 0;
  for (int k = 1; k <= table.n(); ++k) {
    mpz_class s = 0;
    for (auto v : table.column(k)) s += pow_z(v, static_cast<unsigned long>(j));  // 0^0 = 1
    if (k % 2 == 1)
      total += s;
    else
      total -= s;
  }
  return total;
}

SigmaProfile sigma_profile(const BettiTable& table) {
  SigmaProfile p;
  for (int j = 0; j <= table.n(); ++j) {
    p.sigma.push_back(sigma(table, j));
    p.expected.push_back(expected_sigma(table, j));
    if (j >= 1 && !p.first_mismatch && p.sigma.back() != p.expected.back()) p.first_mismatch = j;
  }
  return p;
}

Check euler_consistency(const BettiTable& table) {
  const mpz_class s0 = sigma(table, 0);
  const mpz_class s1 = sigma(table, 1);
  Check c;
  c.name = "euler";
  c.rule = "sigma_0 = n and sigma_1 = d - 1";
  c.witness = {{"sigma_0", s0.get_str()}, {"sigma_1", s1.get_str()},
               {"n", std::to_string(table.n())}, {"d_minus_1", std::to_string(table.d() - 1)}};
  const bool ok = s0 == table.n() && s1 == table.d() - 1;
  c.status = ok ? Status::Pass : Status::Fail;
  c.obstruction = !ok;
  c.detail = ok ? "alternating rank and degree sums match"
                : "sigma_0 = " + s0.get_str() + ", sigma_1 = " + s1.get_str() + " (expected " +
                      std::to_string(table.n()) + ", " + std::to_string(table.d() - 1) + ")";
  return c;
}

DimensionVerdict singular_dimension(const BettiTable& table) {
  DimensionVerdict v;
  if (sigma(table, 0) != table.n()) {
    v.kind = DimensionVerdict::Kind::Inconsistent;
    v.reason = "sigma_0 != n";
    return v;
  }
  for (int j = 1; j <= table.n(); ++j) {
    if (sigma(table, j) == expected_sigma(table, j)) continue;
    if (j <= 1) {
      v.kind = DimensionVerdict::Kind::Inconsistent;
      v.reason = "sigma_1 != d - 1";
    } else {
      v.kind = DimensionVerdict::Kind::Singular;
      v.delta = table.n() - j;
      v.reason = "first sigma mismatch at j = " + std::to_string(j);
    }
    return v;
  }
  v.kind = DimensionVerdict::Kind::Smooth;
  v.reason = "all sigma relations hold";
  return v;
}

DegreeOfSigma degree_of_sigma(const BettiTable& table, int delta) {
  const int c = table.n() - delta;
  if (delta < 0 || c < 1) throw std::out_of_range("degree_of_sigma: delta out of range");
  mpz_class num = pow_z(table.d() - 1, static_cast<unsigned long>(c));
  const mpz_class s = sigma(table, c);
  num += (c % 2 == 0) ? s : mpz_class(-s);
  DegreeOfSigma out;
  out.value = mpq_class(num, factorial(static_cast<unsigned long>(c)));
  out.value.canonicalize();
  out.integral = out.value.get_den() == 1;
  out.positive = sgn(out.value) > 0;
  return out;
}

Divisibility divisibility_N_t(const BettiTable& table, int t) {
  if (t < 1 || t > table.n()) throw std::out_of_range("divisibility: t out of range");
  Divisibility out;
  out.t = t;
  out.applicable = true;
  for (int j = 1; j < t; ++j)
    if (sigma(table, j) != expected_sigma(table, j)) out.applicable = false;
  const mpz_class s = sigma(table, t);
  out.n_t = pow_z(table.d() - 1, static_cast<unsigned long>(t)) + ((t % 2 == 0) ? s : mpz_class(-s));
  out.divisible = mpz_divisible_p(out.n_t.get_mpz_t(), factorial(static_cast<unsigned long>(t)).get_mpz_t()) != 0;
  return out;
}

BettiTable koszul_smooth_table(int n, int d) {
  if (n < 2 || d < 3) throw std::invalid_argument("koszul_smooth_table needs n >= 2, d >= 3");
  std::vector<BettiTable::Column> cols;
  for (int k = 1; k <= n; ++k) {
    mpz_class m;
    mpz_bin_uiui(m.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(k + 1));
    cols.emplace_back(m.get_ui(), static_cast<std::int64_t>(k) * (d - 1));
  }
  return BettiTable(n, d, std::move(cols));
}

mpz_class hilbert_function_from_table(const BettiTable& table, long k) {
  if (k < 0) throw std::out_of_range("hilbert_function_from_table: negative degree");
  const std::size_t n = static_cast<std::size_t>(table.n());
  const long s = k - table.d() + 1;
  mpz_class h = poly::dim_graded_piece(n, k) - (table.n() + 1) * poly::dim_graded_piece(n, s);
  for (int kk = 1; kk <= table.n(); ++kk) {
    mpz_class part = 0;
    for (auto v : table.column(kk)) part += poly::dim_graded_piece(n, s - v);
    if (kk % 2 == 1)
      h += part;
    else
      h -= part;
  }
  return h;
}

namespace {

// A_j(a) = e_{n-j}(a+1, ..., a+n), j = 0..n: the coefficients of
// n! binom(s + a + n, n) as a polynomial in s.
std::vector<mpz_class> a_coefficients(int n, std::int64_t a) {
  std::vector<mpz_class> e(static_cast<std::size_t>(n) + 1, 0);
  e[0] = 1;
  for (int i = 1; i <= n; ++i) {
    const mpz_class root(static_cast<long>(a + i));
    for (int m = i; m >= 1; --m) e[static_cast<std::size_t>(m)] += root * e[static_cast<std::size_t>(m - 1)];
  }
  std::vector<mpz_class> A(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) A[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(n - j)];
  return A;
}

}  // namespace

std::vector<mpq_class> hilbert_polynomial_from_table(const BettiTable& table) {
  const int n = table.n();
  const int d = table.d();
  const auto un = static_cast<std::size_t>(n);

  // n! dim M_{s+d-1} = sum_j B_j s^j for large s.
  std::vector<mpz_class> B(un + 1, 0);
  auto accumulate = [&](std::int64_t a, const mpz_class& weight) {
    const auto A = a_coefficients(n, a);
    for (std::size_t j = 0; j <= un; ++j) B[j] += weight * A[j];
  };
  accumulate(d - 1, 1);
  accumulate(0, -(n + 1));
  for (int k = 1; k <= n; ++k)
    for (auto v : table.column(k)) accumulate(-v, (k % 2 == 1) ? 1 : -1);

  // Substitute s = k - (d - 1) and divide by n!.
  std::vector<mpq_class> P(un + 1, 0);
  const mpz_class shift = -(d - 1);
  std::vector<mpz_class> power{1};  // (k + shift)^j, ascending in k
  for (std::size_t j = 0; j <= un; ++j) {
    for (std::size_t i = 0; i < power.size(); ++i) P[i] += mpq_class(B[j] * power[i]);
    std::vector<mpz_class> next(power.size() + 1, 0);
    for (std::size_t i = 0; i < power.size(); ++i) {
      next[i + 1] += power[i];
      next[i] += shift * power[i];
    }
    power = std::move(next);
  }
  const mpz_class nf = factorial(un);
  for (auto& c : P) {
    c /= nf;
    c.canonicalize();
  }
  while (!P.empty() && P.back() == 0) P.pop_back();
  return P;
}

}  // namespace singulus::rules
