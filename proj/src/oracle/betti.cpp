#include <bit>
#include <string>

#include "common.hpp"
#include "graded_pieces.hpp"
#include "singulus/sparse_matrix.hpp"

namespace singulus::oracle {

namespace {

using BettiMap = std::map<std::pair<int, int>, std::uint64_t>;

// Subsets of {0..n} as bit masks, grouped by size, increasing within a size.
struct Subsets {
  std::vector<std::vector<std::uint32_t>> by_size;
  std::vector<std::size_t> position;  // mask -> index within its size

  explicit Subsets(std::size_t vars) : by_size(vars + 1), position(std::size_t{1} << vars) {
    for (std::uint32_t mask = 0; mask < (1u << vars); ++mask) {
      auto& group = by_size[static_cast<std::size_t>(std::popcount(mask))];
      position[mask] = group.size();
      group.push_back(mask);
    }
  }
};

// Rank of the Koszul differential K_p -> K_{p-1} in internal degree q, where
// K_p(q) = Lambda^p C^{n+1} (x) M(f)_{q-p} and
// d(m e_I) = sum_j (-1)^j x_{i_j} m e_{I \ i_j}.
template <class Field>
std::size_t koszul_rank(const detail::MilnorAlgebra<Field>& alg, const Subsets& subsets, int p, int q) {
  if (p < 1 || q - p < 0) return 0;
  const auto& field = alg.field();
  const unsigned src_deg = static_cast<unsigned>(q - p);
  const std::size_t src_dim = alg.dim(src_deg);
  const std::size_t dst_dim = alg.dim(src_deg + 1);
  const auto& sources = subsets.by_size[static_cast<std::size_t>(p)];
  const auto& targets = subsets.by_size[static_cast<std::size_t>(p - 1)];
  if (src_dim == 0 || dst_dim == 0) return 0;

  la::DenseMatrix<Field> m(field, sources.size() * src_dim, targets.size() * dst_dim);
  const std::size_t vars = alg.n() + 1;
  for (std::size_t a = 0; a < sources.size(); ++a) {
    const std::uint32_t mask = sources[a];
    for (std::size_t s = 0; s < src_dim; ++s) {
      const std::size_t row = a * src_dim + s;
      int j = 0;
      for (std::size_t i = 0; i < vars; ++i) {
        if (!(mask >> i & 1u)) continue;
        const std::size_t base = subsets.position[mask & ~(1u << i)] * dst_dim;
        for (auto& [slot, v] : alg.times_variable(src_deg, s, i))
          m(row, base + slot) = (j % 2 == 0) ? v : field.neg(v);
        ++j;
      }
    }
  }
  return m.rank();
}

template <class Field>
BettiMap betti_over(const poly::Polynomial& f, Field field, int top, unsigned threads,
                    const std::vector<detail::MonomialPiece>& monomials) {
  const detail::MilnorAlgebra<Field> alg(f, std::move(field), static_cast<unsigned>(top), threads, monomials);
  const int vars = static_cast<int>(alg.n()) + 1;
  const Subsets subsets(static_cast<std::size_t>(vars));

  // rank[p][q] for 1 <= p <= vars; p = 0 and p = vars + 1 stay zero.
  std::vector<std::vector<std::size_t>> rank(static_cast<std::size_t>(vars + 2),
                                             std::vector<std::size_t>(static_cast<std::size_t>(top + 1), 0));
  const std::size_t per_p = static_cast<std::size_t>(top + 1);
  detail::parallel_for(static_cast<std::size_t>(vars) * per_p, threads, [&](std::size_t unit) {
    const int p = static_cast<int>(unit / per_p) + 1;
    const int q = static_cast<int>(unit % per_p);
    rank[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = koszul_rank(alg, subsets, p, q);
  });

  BettiMap betti;
  for (int p = 0; p <= vars; ++p) {
    const std::uint64_t wedge = subsets.by_size[static_cast<std::size_t>(p)].size();
    for (int q = p; q <= top; ++q) {
      const std::uint64_t chains = wedge * alg.dim(static_cast<unsigned>(q - p));
      const std::uint64_t b = chains - rank[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] -
                              rank[static_cast<std::size_t>(p + 1)][static_cast<std::size_t>(q)];
      if (b != 0) betti[{p, q}] = b;
    }
  }
  return betti;
}

void check_cone(const poly::Polynomial& f, const detail::Shape& s, const std::vector<std::uint32_t>& primes) {
  const detail::MonomialPiece piece(s.n, s.d - 1);
  std::vector<la::Entry> entries;
  for (std::size_t i = 0; i <= s.n; ++i) {
    const auto fi = poly::partial(f, i);
    for (const auto& [m, c] : fi.terms()) entries.push_back({i, piece.index.at(m), c});
  }
  const auto m = la::SparseMatrix::from_entries(s.n + 1, piece.monomials.size(), entries);
  const std::vector<std::uint64_t> wide(primes.begin(), primes.end());
  const auto cert = la::rank_certified(m, wide);
  if (cert.rank < s.n + 1)
    throw OracleError(OracleError::Code::Cone, "the partial derivatives are linearly dependent (rank " +
                                                   std::to_string(cert.rank) + " of " + std::to_string(s.n + 1) +
                                                   "), so f defines a cone");
}

}  // namespace

BettiData graded_betti(const poly::Polynomial& f, const OracleOptions& options) {
  const auto shape = detail::validate(f);
  const int n = static_cast<int>(shape.n);
  const int d = static_cast<int>(shape.d);
  const unsigned max_degree = options.max_degree.value_or(static_cast<unsigned>((n + 1) * (d - 1)));
  if (max_degree + 1 < shape.d)
    throw OracleError(OracleError::Code::OutOfRange,
                      "max degree must be at least d - 1 = " + std::to_string(d - 1));
  const auto primes = working_primes(f, options);
  check_cone(f, shape, primes);

  // One degree past the bound is probed to detect truncation.
  const int top = static_cast<int>(max_degree) + 1;
  std::vector<detail::MonomialPiece> monomials;
  for (int k = 0; k <= top; ++k) monomials.emplace_back(shape.n, static_cast<unsigned>(k));

  Provenance prov{primes, false};
  BettiMap betti = betti_over(f, la::PrimeField(primes.front()), top, options.threads, monomials);
  for (std::size_t i = 1; i < primes.size(); ++i) {
    if (betti_over(f, la::PrimeField(primes[i]), top, options.threads, monomials) != betti) {
      betti = betti_over(f, la::RationalField{}, top, options.threads, monomials);
      prov.rational_fallback = true;
      break;
    }
  }

  std::string beyond;
  for (const auto& [pq, b] : betti)
    if (pq.second == top) beyond += (beyond.empty() ? "" : ", ") + ("beta_{" + std::to_string(pq.first) + "," +
                                                                    std::to_string(pq.second) + "} = " + std::to_string(b));
  if (!beyond.empty())
    throw OracleError(OracleError::Code::Incomplete, "nonzero Betti numbers past max degree " +
                                                         std::to_string(max_degree) + ": " + beyond +
                                                         "; raise the bound and retry");

  for (const auto& [pq, b] : betti) {
    const auto [p, q] = pq;
    const bool ok = p == 0 ? (q == 0 && b == 1) : p == 1 ? (q == d - 1 && b == static_cast<std::uint64_t>(n + 1)) : q - (d - 1) >= 0;
    if (!ok)
      throw std::logic_error("unexpected Betti number beta_{" + std::to_string(p) + "," + std::to_string(q) +
                             "} = " + std::to_string(b));
  }
  if (!betti.contains({0, 0}) || !betti.contains({1, d - 1}))
    throw std::logic_error("Betti numbers in homological degrees 0 and 1 are missing");

  std::vector<BettiTable::Column> columns(static_cast<std::size_t>(n));
  for (const auto& [pq, b] : betti) {
    const auto [p, q] = pq;
    if (p < 2) continue;
    columns[static_cast<std::size_t>(p - 2)].insert(columns[static_cast<std::size_t>(p - 2)].end(), b, q - (d - 1));
  }
  return BettiData{BettiTable(n, d, std::move(columns)), std::move(betti), max_degree, std::move(prov)};
}

}  // namespace singulus::oracle
