#include <algorithm>
#include <random>
#include <numeric>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "singulus/dense.hpp"
#include "singulus/modular.hpp"
#include "singulus/sparse_matrix.hpp"

using namespace singulus::la;

namespace {

constexpr std::uint64_t kMersenne61 = (1ull << 61) - 1;

SparseMatrix dense(std::vector<std::vector<mpq_class>> rows) { return SparseMatrix::from_dense(rows); }

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double density, long bound) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<long> val(-bound, bound);
  std::vector<Entry> e;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) < density) e.push_back({i, j, mpq_class(val(rng))});
  return SparseMatrix::from_entries(r, c, e);
}

SparseMatrix permuted(const SparseMatrix& m, std::mt19937_64& rng) {
  std::vector<std::size_t> pr(m.rows()), pc(m.cols());
  std::iota(pr.begin(), pr.end(), 0);
  std::iota(pc.begin(), pc.end(), 0);
  std::shuffle(pr.begin(), pr.end(), rng);
  std::shuffle(pc.begin(), pc.end(), rng);
  auto entries = m.entries();
  for (auto& e : entries) {
    e.row = pr[e.row];
    e.col = pc[e.col];
  }
  return SparseMatrix::from_entries(m.rows(), m.cols(), entries);
}

}  // namespace

TEST_CASE("reduce_mod", "[exactla]") {
  const auto half = reduce_mod(dense({{mpq_class(1, 2)}}), 7);
  CHECK(half.at(0, 0) == 4);
  CHECK(half.modulus() == 7u);
  CHECK(reduce_mod(dense({{3}}), 3).nnz() == 0);
  CHECK_THROWS_AS(reduce_mod(dense({{mpq_class(1, 3)}}), 3), BadPrimeError);
  CHECK(reduce_mod(dense({{-1}}), 5).at(0, 0) == 4);
}

TEST_CASE("sparse matrix invariants", "[exactla]") {
  std::vector<Entry> dup{{0, 0, 1}, {0, 0, 2}};
  CHECK_THROWS_AS(SparseMatrix::from_entries(2, 2, dup), std::invalid_argument);
  std::vector<Entry> bad{{2, 0, 1}};
  CHECK_THROWS_AS(SparseMatrix::from_entries(2, 2, bad), std::out_of_range);
  std::vector<Entry> zero{{0, 1, 0}, {1, 1, 5}};
  const auto m = SparseMatrix::from_entries(2, 2, zero);
  CHECK(m.nnz() == 1);

  std::ostringstream out;
  dense({{mpq_class(1, 2), 0}, {0, -3}}).dump(out);
  CHECK(out.str() == "% 2 2\n0 0 1/2\n1 1 -3/1\n");
}

TEST_CASE("rank_mod_p", "[exactla]") {
  CHECK(rank_mod_p(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 13).rank == 3);
  const auto m = dense({{1, 1}, {1, -1}});
  CHECK(rank_mod_p(m, 2).rank == 1);
  CHECK(rank_mod_p(m, 5).rank == 2);
  std::vector<std::vector<mpq_class>> v;
  for (long x = 1; x <= 4; ++x) v.push_back({1, x, x * x, x * x * x});
  const auto cert = rank_mod_p(dense(v), 101);
  CHECK(cert.rank == 4);
  CHECK(cert.modulus == 101u);
  CHECK(cert.pivot_columns == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("kernel_dim", "[exactla]") {
  CHECK(kernel_dim(SparseMatrix(2, 5), 7) == 5);
  CHECK(kernel_dim(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 7) == 0);
  CHECK(kernel_dim(dense({{1, 2, 3}}), 7) == 2);
}

TEST_CASE("rank_rational", "[exactla]") {
  CHECK(rank_rational(dense({{1, 1}, {1, -1}})).rank == 2);
  std::vector<std::vector<mpq_class>> outer;
  for (long i = 1; i <= 5; ++i) {
    outer.emplace_back();
    for (long j = 1; j <= 5; ++j) outer.back().push_back(mpq_class(i * (j + 2), 3));
  }
  const auto c = rank_rational(dense(outer));
  CHECK(c.rank == 1);
  CHECK_FALSE(c.modulus.has_value());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 6, 6, trial % 2 ? 0.5 : 0.9, 4);
    REQUIRE(rank_rational(m).rank == rank_mod_p(m, kMersenne61).rank);
  }
}

TEST_CASE("rank properties on random sparse matrices", "[exactla][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + trial % 9, c = 1 + (trial * 7) % 11;
    const auto m = random_matrix(rng, r, c, 0.35, 3);
    const auto exact = rank_rational(m).rank;
    for (std::uint64_t p : {2ull, 3ull, 7ull, 101ull, 2147483647ull}) {
      const auto cert = rank_mod_p(m, p);
      REQUIRE(cert.rank <= exact);
      REQUIRE(cert.rank == cert.pivot_columns.size());
      REQUIRE(std::is_sorted(cert.pivot_columns.begin(), cert.pivot_columns.end()));
      REQUIRE(kernel_dim(m, p) + cert.rank == m.cols());
      REQUIRE(rank_mod_p(permuted(m, rng), p).rank == cert.rank);
    }
    REQUIRE(rank_rational(permuted(m, rng)).rank == exact);
    const std::uint64_t primes[] = {2147483629, 2147483587};
    REQUIRE(rank_certified(m, primes).rank == exact);
  }
}

TEST_CASE("rank_certified falls back on bad primes", "[exactla]") {
  const auto m = dense({{mpq_class(1, 3), 1}, {1, 3}});
  const std::uint64_t primes[] = {3, 1000003};
  const auto c = rank_certified(m, primes);
  CHECK(c.rank == 1);
}

TEST_CASE("pivot certificate spans the column space", "[exactla]") {
  // Pivot columns of a rank-2 matrix in echelon-friendly position.
  const auto m = dense({{0, 1, 2, 3}, {0, 2, 4, 7}, {0, 1, 2, 4}});
  const auto cert = rank_mod_p(m, 101);
  CHECK(cert.rank == 2);
  std::vector<std::vector<mpq_class>> sub;
  for (std::size_t r = 0; r < 3; ++r) {
    sub.emplace_back();
    for (auto c : cert.pivot_columns) sub.back().push_back(m.at(r, c));
  }
  CHECK(rank_rational(dense(sub)).rank == 2);
}

TEST_CASE("dense elimination agrees with sparse ranks", "[exactla]") {
  std::mt19937_64 rng(3);
  const std::uint32_t p = 1000003;
  for (int trial = 0; trial < 80; ++trial) {
    const auto m = random_matrix(rng, 3 + trial % 8, 2 + trial % 13, 0.4, 5);
    DenseMatrix<PrimeField> a(PrimeField(p), m.rows(), m.cols());
    DenseMatrix<RationalField> b(RationalField{}, m.rows(), m.cols());
    for (const auto& e : m.entries()) {
      a(e.row, e.col) = a.field().from_rational(e.value);
      b(e.row, e.col) = e.value;
    }
    REQUIRE(a.rank() == rank_mod_p(m, p).rank);
    auto reduced = b;
    const auto piv = reduced.row_reduce(true);
    REQUIRE(piv.size() == rank_rational(m).rank);
    for (std::size_t r = 0; r < piv.size(); ++r)
      for (std::size_t s = 0; s < piv.size(); ++s) REQUIRE(reduced(s, piv[r]) == (r == s ? 1 : 0));
  }
}

TEST_CASE("modular helpers", "[exactla]") {
  CHECK(inv_mod(3, 7) == 5);
  CHECK(rational_mod(mpq_class(-2, 3), 7) == 4);
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ull));
  const auto ps = random_word_primes(42, 4);
  CHECK(ps.size() == 4);
  for (auto p : ps) {
    CHECK(is_prime(p));
    CHECK(p >= (1u << 30));
    CHECK(p < (1u << 31));
  }
  CHECK(random_word_primes(42, 4) == ps);
  CHECK_THROWS(PrimeField(1u << 31));
}

TEST_CASE("modular ranks that disagree fall back to the rational rank", "[exactla]") {
  // mod 2 the matrix is singular, mod 3 it is not.
  const auto m = dense({{2, 0}, {0, 1}});
  const std::uint64_t primes[] = {2, 3};
  CHECK(rank_mod_p(m, 2).rank == 1);
  CHECK(rank_certified(m, primes).rank == 2);
}
