#include <algorithm>
#include <functional>
#include <string>

#include "common.hpp"
#include "graded_pieces.hpp"
#include "singulus/digest.hpp"
#include "singulus/modular.hpp"

namespace singulus::oracle {

std::string_view code_name(OracleError::Code code) {
  switch (code) {
    case OracleError::Code::NonHomogeneous:
      return "NON_HOMOGENEOUS";
    case OracleError::Code::OutOfRange:
      return "OUT_OF_RANGE";
    case OracleError::Code::Cone:
      return "CONE";
    case OracleError::Code::Incomplete:
      return "INCOMPLETE";
    case OracleError::Code::WindowTooSmall:
      return "WINDOW_TOO_SMALL";
    case OracleError::Code::BadPrime:
      return "BAD_PRIME";
  }
  return "UNKNOWN";
}

namespace {

bool divides_a_denominator(const poly::Polynomial& f, std::uint32_t p) {
  for (const auto& [m, c] : f.terms())
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) return true;
  return false;
}

}  // namespace

std::vector<std::uint32_t> working_primes(const poly::Polynomial& f, const OracleOptions& options) {
  if (!options.primes.empty()) {
    std::vector<std::uint32_t> out;
    for (auto p : options.primes) {
      if (p < 2 || p >= simd::kMaxKernelModulus || !la::is_prime(p))
        throw OracleError(OracleError::Code::BadPrime, std::to_string(p) + " is not a prime below 2^31");
      if (divides_a_denominator(f, p))
        throw OracleError(OracleError::Code::BadPrime, std::to_string(p) + " divides a coefficient denominator");
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
  }
  // Draw from a stream seeded by the input until two usable primes turn up.
  const std::uint64_t seed = seed_from("primes:" + f.to_string());
  std::vector<std::uint32_t> out;
  for (std::size_t want = 2; out.size() < 2; want += 2) {
    out.clear();
    for (auto p : la::random_word_primes(seed, want)) {
      if (!divides_a_denominator(f, p)) out.push_back(p);
      if (out.size() == 2) break;
    }
  }
  return out;
}

namespace detail {

Shape validate(const poly::Polynomial& f) {
  if (f.is_zero()) throw OracleError(OracleError::Code::OutOfRange, "the zero polynomial has no degree");
  if (!f.is_homogeneous()) throw OracleError(OracleError::Code::NonHomogeneous, "polynomial is not homogeneous");
  const unsigned d = *f.degree();
  if (d < 3) throw OracleError(OracleError::Code::OutOfRange, "degree must be at least 3, got " + std::to_string(d));
  if (f.n() < 2)
    throw OracleError(OracleError::Code::OutOfRange, "need at least 3 variables, got " + std::to_string(f.n() + 1));
  return {f.n(), d};
}

unsigned hilbert_window(const Shape& s, const OracleOptions& options) {
  if (options.window) return *options.window;
  return static_cast<unsigned>((s.n + 1) * (s.d - 2) + s.n + 2);
}

namespace {

template <class Field>
std::uint64_t jacobian_rank(const poly::Polynomial& f, const Shape& s, unsigned k, const Field& field) {
  const MonomialPiece target(s.n, k);
  if (k + 1 < s.d) return 0;
  auto m = jacobian_piece(reduce_partials(f, field), field, s.n, s.d, k, target);
  return m.rank();
}

}  // namespace

std::uint64_t jacobian_rank_mod(const poly::Polynomial& f, const Shape& s, unsigned k, std::uint32_t p) {
  return jacobian_rank(f, s, k, la::PrimeField(p));
}

std::uint64_t jacobian_rank_rational(const poly::Polynomial& f, const Shape& s, unsigned k) {
  return jacobian_rank(f, s, k, la::RationalField{});
}

}  // namespace detail

std::uint64_t milnor_dimension(const poly::Polynomial& f, unsigned k, const OracleOptions& options) {
  const auto shape = detail::validate(f);
  const auto primes = working_primes(f, options);
  const std::uint64_t total = poly::dim_graded_piece(shape.n, k).get_ui();
  std::vector<std::uint64_t> ranks;
  for (auto p : primes) ranks.push_back(detail::jacobian_rank_mod(f, shape, k, p));
  if (std::adjacent_find(ranks.begin(), ranks.end(), std::not_equal_to<>()) == ranks.end())
    return total - ranks.front();
  return total - detail::jacobian_rank_rational(f, shape, k);
}

}  // namespace singulus::oracle
