#pragma once

#include <cstdint>

#include "singulus/polynomial.hpp"

namespace singulus::poly {

struct SquarefreeOptions {
  unsigned trials = 3;
  /// Zero derives the seed from the canonical form of f.
  std::uint64_t seed = 0;
  /// Line coordinates are drawn from [-bound, bound].
  long coordinate_bound = 1000003;
};

/// Probabilistic test that a homogeneous form has no repeated factor.
///
/// f is restricted to random projective lines t -> a + t*b and the
/// univariate gcd(g, g') is computed exactly. A repeated factor of f shows
/// up on every line, so a single nontrivial gcd answers false; all trials
/// trivial answers true.
bool is_squarefree(const Polynomial& f, const SquarefreeOptions& options = {});

}  // namespace singulus::poly
