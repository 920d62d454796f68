#include <algorithm>
#include <string>

#include "common.hpp"
#include "parallel.hpp"

namespace singulus::oracle {

namespace {

using Coeffs = std::vector<mpq_class>;  // lowest degree first

Coeffs times_linear(const Coeffs& p, const mpq_class& shift) {  // p(k) * (k + shift)
  Coeffs out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] += p[i] * shift;
  }
  return out;
}

mpq_class evaluate(const Coeffs& p, long k) {
  mpq_class v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * k + *it;
  return v;
}

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Forward differences of v[a..] of every order up to `order`.
std::vector<std::vector<mpz_class>> differences(const std::vector<std::uint64_t>& v, std::size_t a,
                                                std::size_t order) {
  std::vector<std::vector<mpz_class>> rows(1);
  for (std::size_t k = a; k < v.size(); ++k) rows[0].emplace_back(static_cast<unsigned long>(v[k]));
  for (std::size_t o = 1; o <= order; ++o) {
    const auto& prev = rows.back();
    std::vector<mpz_class> next;
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
    rows.push_back(std::move(next));
  }
  return rows;
}

// Newton form from v[a], rewritten in powers of k.
Coeffs newton_polynomial(const std::vector<std::vector<mpz_class>>& diffs, std::size_t a, std::size_t degree) {
  Coeffs total;
  Coeffs binom{1};  // C(k - a, i)
  mpz_class factorial = 1;
  for (std::size_t i = 0; i <= degree; ++i) {
    if (i > 0) {
      binom = times_linear(binom, -mpq_class(static_cast<long>(a + i - 1)));
      factorial *= static_cast<unsigned long>(i);
    }
    if (total.size() < binom.size()) total.resize(binom.size());
    for (std::size_t j = 0; j < binom.size(); ++j) total[j] += mpq_class(diffs[i][0]) * binom[j] / factorial;
  }
  trim(total);
  return total;
}

std::string tail_text(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t k = v.size() > 6 ? v.size() - 6 : 0; k < v.size(); ++k)
    s += (s.empty() ? "" : ", ") + std::to_string(v[k]);
  return s;
}

}  // namespace

HilbertData hilbert_fit(const poly::Polynomial& f, const OracleOptions& options) {
  const auto shape = detail::validate(f);
  const unsigned window = detail::hilbert_window(shape, options);
  const auto primes = working_primes(f, options);

  HilbertData out;
  out.n = static_cast<int>(shape.n);
  out.d = static_cast<int>(shape.d);
  out.provenance.primes = primes;
  out.values.resize(window + 1);

  std::vector<char> escalated(window + 1, 0);
  detail::parallel_for(window + 1, options.threads, [&](std::size_t k) {
    const unsigned deg = static_cast<unsigned>(k);
    std::uint64_t rank = detail::jacobian_rank_mod(f, shape, deg, primes.front());
    for (std::size_t i = 1; i < primes.size(); ++i) {
      if (detail::jacobian_rank_mod(f, shape, deg, primes[i]) != rank) {
        rank = detail::jacobian_rank_rational(f, shape, deg);
        escalated[k] = 1;
        break;
      }
    }
    out.values[k] = poly::dim_graded_piece(shape.n, deg).get_ui() - rank;
  });
  out.provenance.rational_fallback = std::find(escalated.begin(), escalated.end(), 1) != escalated.end();

  const auto& v = out.values;
  std::optional<std::size_t> fitted;
  for (std::size_t delta = 0; delta <= shape.n && !fitted; ++delta) {
    const std::size_t points = delta + 4;
    if (v.size() < points) break;
    const std::size_t a = v.size() - points;
    const auto diffs = differences(v, a, delta + 1);
    const auto& top = diffs[delta + 1];
    if (!std::all_of(top.begin(), top.end(), [](const mpz_class& x) { return x == 0; })) continue;
    out.polynomial = newton_polynomial(diffs, a, delta);
    fitted = delta;
  }
  if (!fitted)
    throw OracleError(OracleError::Code::WindowTooSmall,
                      "Hilbert function does not stabilize within degree " + std::to_string(window) +
                          "; tail: " + tail_text(v));

  std::size_t k0 = v.size();
  while (k0 > 0 && evaluate(out.polynomial, static_cast<long>(k0 - 1)) == mpq_class(static_cast<unsigned long>(v[k0 - 1])))
    --k0;
  out.stabilization = static_cast<unsigned>(k0);

  if (!out.polynomial.empty()) {
    const int delta = static_cast<int>(out.polynomial.size()) - 1;
    out.delta = delta;
    mpq_class lead = out.polynomial.back();
    for (int i = 2; i <= delta; ++i) lead *= i;
    if (lead.get_den() != 1)
      throw std::logic_error("Hilbert polynomial has non-integral leading term " + lead.get_str());
    out.degree_sigma = lead.get_num();
    if (delta == 0) out.tjurina = lead.get_num();
  }
  return out;
}

}  // namespace singulus::oracle
