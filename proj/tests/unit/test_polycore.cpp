#include <random>

#include <catch_amalgamated.hpp>

#include "singulus/digest.hpp"
#include "singulus/parse.hpp"
#include "singulus/squarefree.hpp"

using namespace singulus::poly;

namespace {

Polynomial random_form(std::mt19937_64& rng, std::size_t n, unsigned d, int terms) {
  Polynomial f(n);
  auto basis = monomial_basis(n, d);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  for (int i = 0; i < terms; ++i) f.add_term(basis[pick(rng)], mpq_class(num(rng), den(rng)));
  return f;
}

std::size_t parse_offset(std::string_view text, std::size_t n) {
  try {
    parse(text, n);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse expands and normalizes", "[parse]") {
  const auto fermat = parse("x0^3+x1^3+x2^3", 2);
  CHECK(fermat.size() == 3);
  CHECK(fermat.degree() == 3u);
  CHECK(fermat.to_string() == "x0^3 + x1^3 + x2^3");

  const auto g = parse("x0*x1*x2 + x3^3", 3);
  CHECK(g.size() == 2);
  CHECK(g.degree() == 3u);
  CHECK(g.is_homogeneous());

  CHECK(parse("(x0 + x1)^2 - x0^2 - x1^2", 2) == parse("2 x0 x1", 2));
  CHECK(parse(" - 1/2 * x0 ^ 2 ", 2).to_string() == "-1/2*x0^2");
  CHECK(parse("x0 - x0", 2).to_string() == "0");
  CHECK(parse("3/6*x1", 2) == parse("1/2*x1", 2));
}

TEST_CASE("parse reports offsets", "[parse]") {
  CHECK(parse_offset("x0^", 2) == 3);
  CHECK(parse_offset("x0 + x3", 2) == 5);
  CHECK(parse_offset("x0^a", 2) == 3);
  CHECK(parse_offset("x0^0", 2) == 3);
  CHECK(parse_offset("(x0 + x1", 2) == 8);
  CHECK(parse_offset("1/0*x0", 2) == 2);
  CHECK(parse_offset("", 2) == 0);
  CHECK(parse_offset("x0 $ x1", 2) == 3);
}

TEST_CASE("parse infers the ring", "[parse]") {
  CHECK(parse("x0*x1").n() == 2);
  CHECK(parse("x5^2").n() == 5);
}

TEST_CASE("partial derivatives", "[partial]") {
  const auto g = parse("x0*x1*x2 + x3^3", 3);
  CHECK(partial(g, 3) == parse("3*x3^2", 3));
  CHECK(partial(parse("x0^3+x1^3+x2^3", 2), 0) == parse("3*x0^2", 2));
  CHECK(partial(parse("x0*x1*x2", 3), 3).is_zero());
  CHECK_THROWS_AS(partial(g, 4), std::out_of_range);
}

TEST_CASE("monomial bases", "[monomial]") {
  CHECK(monomial_basis(2, 2).size() == 6);
  CHECK(monomial_basis(3, 0).size() == 1);
  CHECK(monomial_basis(3, 4).size() == 35);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (unsigned k = 0; k <= 12; ++k) {
      const auto b = monomial_basis(n, k);
      REQUIRE(mpz_class(static_cast<unsigned long>(b.size())) == dim_graded_piece(n, k));
      for (std::size_t i = 1; i < b.size(); ++i) REQUIRE(grevlex_compare(b[i - 1], b[i]) < 0);
      for (const auto& m : b) REQUIRE(m.degree() == k);
    }
  }
  CHECK(dim_graded_piece(3, -1) == 0);
}

TEST_CASE("grevlex order", "[monomial]") {
  // x0 > x1 > x2, and x1^2 > x0*x2 in grevlex.
  CHECK(grevlex_compare(Monomial{1, 0, 0}, Monomial{0, 1, 0}) > 0);
  CHECK(grevlex_compare(Monomial{0, 2, 0}, Monomial{1, 0, 1}) > 0);
  CHECK(grevlex_compare(Monomial{2, 0, 0}, Monomial{0, 0, 1}) > 0);
  CHECK(grevlex_compare(Monomial{1, 1, 0}, Monomial{1, 1, 0}) == 0);
}

TEST_CASE("zero and constants", "[polynomial]") {
  Polynomial z(2);
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  CHECK(z.to_string() == "0");
  const auto c = Polynomial::constant(2, 5);
  CHECK(c.degree() == 0u);
  CHECK(c.to_string() == "5");
}

TEST_CASE("algebraic properties on random forms", "[polynomial][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const unsigned d = 2 + static_cast<unsigned>(trial % 4);
    const auto f = random_form(rng, n, d, 6);
    const auto g = random_form(rng, n, d + 1, 5);

    // Euler relation d*f = sum x_i f_i.
    Polynomial euler(n);
    for (std::size_t i = 0; i <= n; ++i) euler += Polynomial::variable(n, i) * partial(f, i);
    REQUIRE(euler == f.scaled(d));

    INFO(f.to_string());
    REQUIRE(parse(f.to_string(), n) == f);
    REQUIRE(parse(g.to_string(), n) == g);

    for (std::size_t i = 0; i <= n; ++i) {
      REQUIRE(partial(f + g, i) == partial(f, i) + partial(g, i));
      REQUIRE(partial(f * g, i) == partial(f, i) * g + f * partial(g, i));
    }
  }
}

TEST_CASE("squarefree check", "[squarefree]") {
  CHECK_FALSE(is_squarefree(parse("x0^2*x1", 2)));
  CHECK(is_squarefree(parse("x0*x1*x2 + x3^3", 3)));
  CHECK(is_squarefree(parse("x0*x1*(x0+x1)", 2)));
  CHECK(is_squarefree(parse("x0^3+x1^3+x2^3", 2)));
  CHECK_FALSE(is_squarefree(parse("(x0+x1+x2)^2*(x0*x1 - x2^2)", 2)));
  CHECK_FALSE(is_squarefree(parse("(x0^2 + x1*x2)^2 * x1", 2)));
  CHECK(is_squarefree(parse("x0*x2^2 + x1*x3^2 + x2^3 + x3^3", 3), {.trials = 5}));
}

TEST_CASE("digests", "[digest]") {
  CHECK(singulus::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(singulus::seed_from("abc") == 0xba7816bf8f01cfeaull);
}
