#pragma once

#include <cstdint>
#include <vector>

#include "singulus/oracle.hpp"

namespace singulus::oracle::detail {

struct Shape {
  std::size_t n;
  unsigned d;
};

/// Rejects anything but a homogeneous form of degree >= 3 in >= 3 variables.
Shape validate(const poly::Polynomial& f);

/// Hilbert window used with these options.
unsigned hilbert_window(const Shape& s, const OracleOptions& options);

/// Rank of J_k modulo each prime; dim S_k when k < d - 1.
std::uint64_t jacobian_rank_mod(const poly::Polynomial& f, const Shape& s, unsigned k, std::uint32_t p);

/// Rank of J_k over Q.
std::uint64_t jacobian_rank_rational(const poly::Polynomial& f, const Shape& s, unsigned k);

}  // namespace singulus::oracle::detail
