#include <cstdio>
#include <stdexcept>

#include "singulus/rules.hpp"

namespace singulus::rules {

HspogWitness hspog_detect(const BettiTable& table) {
  HspogWitness w;
  const int n = table.n();
  if (table.m(1) != static_cast<std::size_t>(n + 1) || (n >= 2 && table.m(2) != 1)) return w;
  for (int k = 3; k <= n; ++k)
    if (table.m(k) != 0) return w;

  const auto& first = table.column(1);
  const auto target = table.column(2).front() - 1;
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i] != target) continue;
    w.hspog = true;
    w.matching_index = static_cast<int>(i) + 1;
    std::int64_t rest = 0;
    for (std::size_t j = 0; j < first.size(); ++j)
      if (j != i) rest += first[j];
    w.other_sum = rest;
    w.other_sum_is_d = rest == table.d();
    break;
  }
  return w;
}

namespace {

// D = s^2 * t with t squarefree.
void split_square(unsigned long D, unsigned long& s, unsigned long& t) {
  s = 1;
  t = D;
  for (unsigned long q = 2; q * q <= t; ++q) {
    while (t % (q * q) == 0) {
      t /= q * q;
      s *= q;
    }
  }
}

}  // namespace

HspogGuarantee hspog_dim_guarantee(int n, int d) {
  if (n < 3 || d < 3) throw std::invalid_argument("hspog_dim_guarantee needs n >= 3 and d >= 3");
  HspogGuarantee out{n, d, 0, false, {}, {}};
  const mpz_class N(n), Dg(d);
  out.g = (N + 1) * Dg * Dg - 2 * N * (N + 1) * Dg + 4 * N * N;
  out.guaranteed = sgn(out.g) > 0;

  // Largest root n(n+1 + sqrt(n^2-2n-3))/(n+1).
  const auto disc = static_cast<unsigned long>(n) * static_cast<unsigned long>(n) - 2ul * n - 3ul;
  if (disc == 0) {
    out.threshold = std::to_string(n);
  } else {
    unsigned long s = 0, t = 0;
    split_square(disc, s, t);
    std::string root = (s == 1 ? "" : std::to_string(s) + "*") + "sqrt(" + std::to_string(t) + ")";
    if (t == 1) root = std::to_string(s);
    out.threshold = std::to_string(n) + "*(" + std::to_string(n + 1) + " + " + root + ")/" +
                    std::to_string(n + 1);
  }
  // floor(100 d') = 100 n + floor(isqrt(10^4 n^2 disc) / (n+1)).
  mpz_class inner = 10000 * N * N * mpz_class(disc);
  mpz_sqrt(inner.get_mpz_t(), inner.get_mpz_t());
  mpz_class hundredths = 100 * N + inner / (N + 1);
  const mpz_class whole = hundredths / 100;
  const mpz_class frac = hundredths % 100;
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02lu", frac.get_ui());
  out.threshold_decimal = whole.get_str() + "." + buf;
  return out;
}

}  // namespace singulus::rules
