#pragma once

// Formulas and necessary conditions on the graded Betti numbers of a
// Jacobian algebra. Everything here is exact integer/rational arithmetic
// on a BettiTable; nothing depends on a defining polynomial.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "singulus/betti_table.hpp"

namespace singulus::rules {

/// sigma_j = sum_k (-1)^(k+1) sum_i d_{k,i}^j, for 0 <= j <= n (0^0 = 1).
mpz_class sigma(const BettiTable& table, int j);

struct SigmaProfile {
  std::vector<mpz_class> sigma;     ///< sigma_0 .. sigma_n
  std::vector<mpz_class> expected;  ///< n, then (-1)^(j+1) (d-1)^j
  /// Smallest j >= 1 with sigma_j != expected_j.
  std::optional<int> first_mismatch;
};

SigmaProfile sigma_profile(const BettiTable& table);

enum class Status { Pass, Fail, NotApplicable, Info };
std::string_view status_name(Status s);

/// One named check of the report. `obstruction` marks a failure that rules
/// the table out as the Betti data of a reduced hypersurface.
struct Check {
  std::string name;
  Status status = Status::Pass;
  bool obstruction = false;
  std::string rule;    ///< human-readable statement being checked
  std::string detail;  ///< outcome in words
  std::map<std::string, std::string> witness;
};

/// sigma_0 = n and sigma_1 = d - 1.
Check euler_consistency(const BettiTable& table);

struct DimensionVerdict {
  enum class Kind { Smooth, Singular, Inconsistent };
  Kind kind = Kind::Inconsistent;
  int delta = -1;  ///< dim of the singular subscheme when Singular
  std::string reason;
};

/// First mismatch j in 2..n of sigma_j against (-1)^(j+1)(d-1)^j gives
/// delta = n - j; no mismatch means smooth; a mismatch at j <= 1 is
/// inconsistent.
DimensionVerdict singular_dimension(const BettiTable& table);

struct DegreeOfSigma {
  mpq_class value;  ///< ((d-1)^c + (-1)^c sigma_c) / c!, c = n - delta
  bool integral = true;
  bool positive = true;
};

DegreeOfSigma degree_of_sigma(const BettiTable& table, int delta);

/// Koszul table of a regular sequence of n+1 forms of degree d-1:
/// m_k = binom(n+1, k+1), every shift k(d-1).
BettiTable koszul_smooth_table(int n, int d);

/// dim M(f)_k read off the resolution (dim S_m = 0 for m < 0).
mpz_class hilbert_function_from_table(const BettiTable& table, long k);

/// Hilbert polynomial in k, coefficients lowest degree first, trailing
/// zeros removed (the zero polynomial is an empty vector).
std::vector<mpq_class> hilbert_polynomial_from_table(const BettiTable& table);

struct RegularityBound {
  int k;
  std::optional<std::int64_t> top;  ///< d_{k,m_k}, empty column -> none
  std::int64_t bound;               ///< n(d-2) + k - 1
  bool pass;
};

struct Regularity {
  std::optional<std::int64_t> reg;  ///< max_k (d_{k,m_k} + d - k - 2)
  std::vector<RegularityBound> inequalities;
};

Regularity regularity_and_Ik(const BettiTable& table);

struct DuPlessisWall {
  mpz_class r;  ///< d_{1,1}
  mpz_class sigma_lower, sigma_upper;  ///< interval for (-1)^n sigma_n
  mpz_class tau_lower, tau_upper;      ///< same bounds on tau
  mpz_class value;                     ///< (-1)^n sigma_n
  bool inside = true;
};

/// Bounds for isolated singularities; empty unless the sigma relations
/// give delta = 0 and column 1 is nonempty.
std::optional<DuPlessisWall> duplessis_wall_check(const BettiTable& table);

struct Divisibility {
  int t;
  bool applicable = false;  ///< sigma relations hold for 1 <= j < t
  mpz_class n_t;            ///< (d-1)^t + (-1)^t sigma_t
  bool divisible = true;    ///< t! | n_t
};

Divisibility divisibility_N_t(const BettiTable& table, int t);

/// Cone flag, m_1 >= n (free flag), and for every nonempty column j >= 2:
/// m_{j-1} >= 3 and d_{j,1} > max(d_{j-1,1}, d_{j-1,2}, d_{j-1,3}).
std::vector<Check> structural_checks(const BettiTable& table);

/// max{k : m_k > 0} + 1 (1 when every column is empty).
int projective_dimension(const BettiTable& table);

struct PdCodim {
  int pd;
  int codim;  ///< n - delta
  bool pass;
};

PdCodim pd_codim_check(const BettiTable& table, int delta);

struct HspogWitness {
  bool hspog = false;
  std::optional<int> matching_index;     ///< 1-based i with d_{2,1} = d_{1,i} + 1
  std::optional<std::int64_t> other_sum; ///< sum of the remaining n first-column shifts
  bool other_sum_is_d = false;
};

HspogWitness hspog_detect(const BettiTable& table);

struct HspogGuarantee {
  int n, d;
  mpz_class g;  ///< (n+1)d^2 - 2n(n+1)d + 4n^2
  bool guaranteed;
  std::string threshold;          ///< largest root of g, as a radical expression
  std::string threshold_decimal;  ///< same, truncated to two decimals
};

/// Whether an HSPOG hypersurface of degree d in P^n is forced to have a
/// singular locus of dimension n-2: decided by the sign of g(d). Needs
/// n >= 3 and d >= 3.
HspogGuarantee hspog_dim_guarantee(int n, int d);

struct Verdict {
  enum class Kind { Smooth, Singular, Inconsistent };
  Kind kind = Kind::Inconsistent;
  std::string reason;
};

std::string_view verdict_name(Verdict::Kind k);

struct SingularReport {
  int n = 0;
  int d = 0;
  SigmaProfile sigma;
  Verdict verdict;
  std::optional<int> delta;               ///< as read from the sigma relations
  std::optional<mpq_class> degree_sigma;  ///< deg of the singular subscheme
  std::optional<mpq_class> tau;           ///< equals degree_sigma when delta = 0
  int pd = 1;
  std::optional<std::int64_t> reg;
  std::vector<Divisibility> divisibility;
  std::vector<mpq_class> hilbert_polynomial;
  std::vector<Check> checks;
  std::vector<std::string> obstructions;

  bool realizable() const { return obstructions.empty(); }
};

/// Runs every check in dependency order. The verdict is Inconsistent as
/// soon as any obstruction fires; otherwise Smooth or Singular.
SingularReport full_report(const BettiTable& table);

}  // namespace singulus::rules
