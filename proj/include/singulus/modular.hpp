#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace singulus::la {

/// Raised when a rational cannot be mapped to Z/p because p divides its
/// denominator. Callers pick another prime.
class BadPrimeError : public std::runtime_error {
 public:
  explicit BadPrimeError(std::uint64_t p)
      : std::runtime_error("prime " + std::to_string(p) + " divides a denominator"), prime_(p) {}
  std::uint64_t prime() const { return prime_; }

 private:
  std::uint64_t prime_;
};

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;  // a, b < p < 2^63
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

/// Inverse of a nonzero residue modulo a prime.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Image of q in Z/p; throws BadPrimeError when p divides the denominator.
std::uint64_t rational_mod(const mpq_class& q, std::uint64_t p);

bool is_prime(std::uint64_t p);

/// `count` distinct primes in [2^30, 2^31), drawn from a generator seeded
/// with `seed`. These fit the vector kernels and keep every product of two
/// residues below 2^62.
std::vector<std::uint32_t> random_word_primes(std::uint64_t seed, std::size_t count);

}  // namespace singulus::la
