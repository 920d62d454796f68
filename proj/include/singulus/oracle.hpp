#pragma once

// Ground truth from an explicit form f: the Hilbert function of the
// Milnor algebra M(f) = S/J_f and its graded Betti numbers, computed as
// Koszul homology Tor^S(M(f), C) by exact linear algebra on graded pieces.
//
// Each computation runs modulo every configured prime; if the primes
// disagree the computation is redone over Q.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "singulus/betti_table.hpp"
#include "singulus/polynomial.hpp"
#include "singulus/rules.hpp"

namespace singulus::oracle {

class OracleError : public std::runtime_error {
 public:
  enum class Code { NonHomogeneous, OutOfRange, Cone, Incomplete, WindowTooSmall, BadPrime };
  OracleError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

std::string_view code_name(OracleError::Code code);

struct OracleOptions {
  /// Primes below 2^31. Empty: two primes derived from the digest of f.
  std::vector<std::uint32_t> primes;
  /// Worker threads for independent degree slices; results do not depend on it.
  unsigned threads = 1;
  /// Last degree of the Betti computation; default (n+1)(d-1).
  std::optional<unsigned> max_degree;
  /// Last degree of the Hilbert window; default (n+1)(d-2)+n+2.
  std::optional<unsigned> window;
};

/// The primes a computation on f will use with these options.
std::vector<std::uint32_t> working_primes(const poly::Polynomial& f, const OracleOptions& options);

/// How the final numbers were certified.
struct Provenance {
  std::vector<std::uint32_t> primes;
  bool rational_fallback = false;
};

/// dim M(f)_k = dim S_k - rank J_k.
std::uint64_t milnor_dimension(const poly::Polynomial& f, unsigned k, const OracleOptions& options = {});

struct HilbertData {
  int n = 0;
  int d = 0;
  std::vector<std::uint64_t> values;  ///< values[k] = dim M(f)_k, k = 0..window
  std::vector<mpq_class> polynomial;  ///< Hilbert polynomial in k, lowest degree first; empty = 0
  unsigned stabilization = 0;         ///< k_0: values agree with the polynomial from here on
  std::optional<int> delta;           ///< degree of the polynomial; empty when it is zero
  std::optional<mpz_class> degree_sigma;
  std::optional<mpz_class> tjurina;   ///< when delta = 0
  Provenance provenance;
};

/// Hilbert function over [0, window], then the Hilbert polynomial fitted on
/// the tail by forward differences.
HilbertData hilbert_fit(const poly::Polynomial& f, const OracleOptions& options = {});

struct BettiData {
  BettiTable table;
  /// beta_{p,q} = dim Tor_p(M(f), C)_q, nonzero entries only.
  std::map<std::pair<int, int>, std::uint64_t> betti;
  unsigned max_degree = 0;
  Provenance provenance;
};

/// Graded Betti numbers of M(f) up to internal degree max_degree.
/// Throws OracleError::Cone when the partials are linearly dependent and
/// OracleError::Incomplete when Tor is nonzero one degree past the bound.
BettiData graded_betti(const poly::Polynomial& f, const OracleOptions& options = {});

struct CrossCheck {
  HilbertData hilbert;
  std::optional<BettiData> betti;
  std::optional<rules::SingularReport> rules;
  std::vector<std::string> deviations;

  bool consistent() const { return deviations.empty(); }
};

/// Runs both pipelines and compares them: delta and deg Sigma, the
/// Hilbert function degree by degree, and the Hilbert polynomial.
/// Incomplete Betti computations are reported as deviations; other errors
/// propagate.
CrossCheck cross_check(const poly::Polynomial& f, const OracleOptions& options = {});

}  // namespace singulus::oracle
