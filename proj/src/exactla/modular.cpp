#include "singulus/modular.hpp"

#include <algorithm>
#include <random>

namespace singulus::la {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero");
  // Extended Euclid on signed 128-bit to stay clear of overflow for p < 2^63.
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a % p;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    std::swap(t, new_t);
    new_t -= q * t;
    std::swap(r, new_r);
    new_r -= q * r;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t rational_mod(const mpq_class& q, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == 8, "LP64 target expected");
  const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) throw BadPrimeError(p);
  const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return mul_mod(num, inv_mod(den, p), p);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  const mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

std::vector<std::uint32_t> random_word_primes(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(1u << 30, (1u << 31) - 1);
  std::vector<std::uint32_t> out;
  while (out.size() < count) {
    std::uint32_t c = dist(rng) | 1u;
    while (!is_prime(c)) c -= 2;
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

}  // namespace singulus::la
