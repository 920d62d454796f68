#include <random>

#include <catch_amalgamated.hpp>

#include "singulus/dense.hpp"
#include "singulus/modular.hpp"
#include "singulus/simd/kernels.hpp"

using namespace singulus;

namespace {

std::vector<std::uint32_t> random_row(std::mt19937_64& rng, std::uint32_t p, std::size_t len) {
  std::uniform_int_distribution<std::uint32_t> v(0, p - 1);
  std::vector<std::uint32_t> row(len);
  for (auto& x : row) {
    // Bias toward the edges of the range, where reductions go wrong.
    const auto r = rng() % 8;
    x = r == 0 ? 0 : r == 1 ? p - 1 : v(rng);
  }
  return row;
}

std::vector<std::uint32_t> moduli() {
  std::vector<std::uint32_t> ps{2, 3, 5, 65537, 1000003, 2147483647u, (1u << 30) + 3};
  for (auto p : la::random_word_primes(99, 6)) ps.push_back(p);
  return ps;
}

}  // namespace

TEST_CASE("scalar kernels match naive arithmetic", "[kernels]") {
  std::mt19937_64 rng(1);
  for (auto p : moduli()) {
    for (std::size_t len : {0u, 1u, 7u, 8u, 33u}) {
      const auto src = random_row(rng, p, len);
      auto dst = random_row(rng, p, len);
      const std::uint32_t c = static_cast<std::uint32_t>(rng() % p);
      auto expect = dst;
      for (std::size_t i = 0; i < len; ++i)
        expect[i] = static_cast<std::uint32_t>((expect[i] + std::uint64_t{c} * src[i]) % p);
      simd::scalar::axpy(dst.data(), src.data(), simd::make_mul_constant(c, p), p, len);
      REQUIRE(dst == expect);

      auto row = src;
      simd::scalar::scale(row.data(), simd::make_mul_constant(c, p), p, len);
      for (std::size_t i = 0; i < len; ++i) REQUIRE(row[i] == std::uint64_t{c} * src[i] % p);
    }
  }
}

TEST_CASE("vector kernels are bit-identical to the scalar reference", "[kernels]") {
  const auto isas = simd::available_isas();
  REQUIRE(isas.front() == simd::Isa::Scalar);
  INFO("available: " << isas.size() << " variant(s), active " << simd::isa_name(simd::active_kernels().isa));
  std::mt19937_64 rng(2);
  for (auto isa : isas) {
    const auto& k = simd::kernels_for(isa);
    REQUIRE(k.isa == isa);
    for (auto p : moduli()) {
      for (std::size_t len = 0; len <= 70; ++len) {
        const auto src = random_row(rng, p, len);
        const auto base = random_row(rng, p, len);
        for (std::uint32_t c : {0u, 1u, p - 1, static_cast<std::uint32_t>(rng() % p)}) {
          const auto mc = simd::make_mul_constant(c, p);
          auto a = base, b = base;
          simd::scalar::axpy(a.data(), src.data(), mc, p, len);
          k.axpy(b.data(), src.data(), mc, p, len);
          REQUIRE(a == b);
          a = base;
          b = base;
          simd::scalar::scale(a.data(), mc, p, len);
          k.scale(b.data(), mc, p, len);
          REQUIRE(a == b);
        }
      }
      // Unaligned starting offsets.
      auto src = random_row(rng, p, 40);
      auto a = random_row(rng, p, 40), b = a;
      const auto mc = simd::make_mul_constant(static_cast<std::uint32_t>(rng() % p), p);
      simd::scalar::axpy(a.data() + 3, src.data() + 5, mc, p, 29);
      k.axpy(b.data() + 3, src.data() + 5, mc, p, 29);
      REQUIRE(a == b);
    }
  }
}

TEST_CASE("elimination is identical under every kernel variant", "[kernels]") {
  std::mt19937_64 rng(3);
  const std::uint32_t p = 2147483629u;
  std::vector<std::vector<std::uint32_t>> results;
  const auto data = random_row(rng, p, 30 * 37);
  for (auto isa : simd::available_isas()) {
    la::DenseMatrix<la::PrimeField> m(la::PrimeField(p, simd::kernels_for(isa)), 30, 37);
    for (std::size_t r = 0; r < 30; ++r)
      for (std::size_t c = 0; c < 37; ++c) m(r, c) = (r * c) % 5 == 1 ? 0 : data[r * 37 + c];
    m.row_reduce(true);
    std::vector<std::uint32_t> flat;
    for (std::size_t r = 0; r < 30; ++r)
      for (auto v : m.row(r)) flat.push_back(v);
    results.push_back(flat);
  }
  for (const auto& r : results) REQUIRE(r == results.front());
}
