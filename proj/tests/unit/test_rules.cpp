#include <algorithm>
#include <random>

#include <catch_amalgamated.hpp>

#include "singulus/rules.hpp"
#include "table_generator.hpp"

using namespace singulus;
using namespace singulus::rules;

namespace {

BettiTable::Column runs(std::initializer_list<std::pair<long, int>> parts) {
  BettiTable::Column out;
  for (auto [v, c] : parts) out.insert(out.end(), static_cast<std::size_t>(c), v);
  return out;
}

BettiTable negative_tau_table() {
  return BettiTable(4, 3, {runs({{2, 9}, {3, 1}}), runs({{4, 7}, {5, 3}}), runs({{6, 2}, {7, 3}}), {9}});
}

BettiTable large_sigma_table() {
  return BettiTable(4, 3,
                    {runs({{2, 10}, {10, 17}, {14, 17}}), runs({{4, 10}, {11, 68}}), runs({{6, 5}, {12, 102}}),
                     runs({{8, 1}, {13, 68}})});
}

BettiTable triangle_table() { return BettiTable(3, 3, {{1, 1, 2, 2, 2}, {3, 3}, {}}); }

const Check& find_check(const SingularReport& r, const std::string& name) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
  REQUIRE(it != r.checks.end());
  return *it;
}

std::vector<mpz_class> sigmas(const BettiTable& t) {
  std::vector<mpz_class> out;
  for (int j = 0; j <= t.n(); ++j) out.push_back(sigma(t, j));
  return out;
}

std::vector<mpz_class> Z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("BettiTable validation", "[table]") {
  CHECK_THROWS_AS(BettiTable(1, 3, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(BettiTable(2, 2, {{}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(BettiTable(2, 3, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(BettiTable(2, 3, {{-1}, {}}), std::invalid_argument);
  const BettiTable t(2, 3, {{3, 2, 2}, {4}});
  CHECK(t.column(1) == BettiTable::Column{2, 2, 3});
  CHECK_THROWS(t.column(3));
}

TEST_CASE("sigma values", "[sigma]") {
  CHECK(sigma(large_sigma_table(), 4) == 392);
  CHECK(sigma(negative_tau_table(), 4) == -208);
  CHECK(sigma(negative_tau_table(), 0) == 4);
  CHECK(sigmas(negative_tau_table()) == Z({4, 2, -4, 8, -208}));
  CHECK(sigmas(large_sigma_table()) == Z({4, 2, -4, 8, 392}));
  CHECK(sigmas(triangle_table()) == Z({3, 2, -4, -28}));
  CHECK_THROWS(sigma(triangle_table(), 4));
  CHECK_THROWS(sigma(triangle_table(), -1));

  const auto p = sigma_profile(triangle_table());
  CHECK(p.expected == Z({3, 2, -4, 8}));
  CHECK(p.first_mismatch == 3);
  CHECK_FALSE(sigma_profile(koszul_smooth_table(3, 3)).first_mismatch.has_value());
}

TEST_CASE("euler consistency", "[sigma]") {
  CHECK(euler_consistency(negative_tau_table()).status == Status::Pass);
  CHECK(euler_consistency(BettiTable(2, 3, {{2, 2, 2}, {4}})).status == Status::Pass);
  auto cols = negative_tau_table().columns();
  cols[3] = {8};
  const BettiTable perturbed(4, 3, cols);
  CHECK(sigma(perturbed, 1) == 3);
  CHECK(euler_consistency(perturbed).status == Status::Fail);
  const auto rep = full_report(perturbed);
  CHECK(rep.verdict.kind == Verdict::Kind::Inconsistent);
  CHECK_FALSE(rep.realizable());
}

TEST_CASE("singular dimension", "[sigma]") {
  const auto v1 = singular_dimension(negative_tau_table());
  CHECK(v1.kind == DimensionVerdict::Kind::Singular);
  CHECK(v1.delta == 0);
  CHECK(singular_dimension(koszul_smooth_table(3, 3)).kind == DimensionVerdict::Kind::Smooth);
  const auto v3 = singular_dimension(triangle_table());
  CHECK(v3.kind == DimensionVerdict::Kind::Singular);
  CHECK(v3.delta == 0);
  // x0*x2^2 + x1*x3^2 + x2^3 + x3^3 is singular along a line.
  const auto line = singular_dimension(BettiTable(3, 3, {{1, 1, 2, 2, 2, 2}, {3, 3, 3, 3}, {4}}));
  CHECK(line.delta == 1);
  CHECK(singular_dimension(BettiTable(2, 3, {{2, 2}, {}})).kind == DimensionVerdict::Kind::Inconsistent);
}

TEST_CASE("degree of the singular subscheme", "[sigma]") {
  const auto e1 = degree_of_sigma(negative_tau_table(), 0);
  CHECK(e1.value == -8);
  CHECK_FALSE(e1.positive);
  CHECK(e1.integral);
  CHECK(degree_of_sigma(large_sigma_table(), 0).value == 17);
  CHECK(degree_of_sigma(triangle_table(), 0).value == 6);
  CHECK(degree_of_sigma(BettiTable(3, 3, {{1, 1, 2, 2, 2, 2}, {3, 3, 3, 3}, {4}}), 1).value == 1);
}

TEST_CASE("smooth reference tables", "[koszul]") {
  CHECK(koszul_smooth_table(2, 3) == BettiTable(2, 3, {{2, 2, 2}, {4}}));
  CHECK(koszul_smooth_table(3, 3) == BettiTable(3, 3, {runs({{2, 6}}), runs({{4, 4}}), {6}}));
  for (int n = 2; n <= 7; ++n) {
    for (int d = 3; d <= 9; ++d) {
      const auto t = koszul_smooth_table(n, d);
      const auto p = sigma_profile(t);
      REQUIRE(p.sigma == p.expected);
      REQUIRE(singular_dimension(t).kind == DimensionVerdict::Kind::Smooth);
      REQUIRE(hilbert_polynomial_from_table(t).empty());
    }
  }
  const auto rep = full_report(koszul_smooth_table(3, 4));
  CHECK(rep.verdict.kind == Verdict::Kind::Smooth);
  CHECK(rep.obstructions.empty());
  CHECK(find_check(rep, "koszul_shape").detail == "table has the Koszul shape");
}

TEST_CASE("hilbert function from a table", "[hilbert]") {
  const auto t = triangle_table();
  CHECK(hilbert_function_from_table(t, 2) == 6);
  CHECK(hilbert_function_from_table(t, 4) == 6);
  CHECK(hilbert_function_from_table(koszul_smooth_table(2, 3), 7) == 0);
  const std::vector<long> expect{1, 5, 10, 10, 4, -3, -7, -8, -8, -8};
  for (std::size_t k = 0; k < expect.size(); ++k)
    CHECK(hilbert_function_from_table(negative_tau_table(), static_cast<long>(k)) == expect[k]);
  CHECK(hilbert_function_from_table(large_sigma_table(), 40) == 17);
}

TEST_CASE("hilbert polynomial from a table", "[hilbert]") {
  CHECK(hilbert_polynomial_from_table(triangle_table()) == std::vector<mpq_class>{6});
  CHECK(hilbert_polynomial_from_table(koszul_smooth_table(3, 3)).empty());
  CHECK(hilbert_polynomial_from_table(large_sigma_table()) == std::vector<mpq_class>{17});
  CHECK(hilbert_polynomial_from_table(negative_tau_table()) == std::vector<mpq_class>{-8});
  CHECK(hilbert_polynomial_from_table(BettiTable(3, 3, {{1, 1, 2, 2, 2, 2}, {3, 3, 3, 3}, {4}})) ==
        std::vector<mpq_class>{3, 1});
}

TEST_CASE("regularity and the isolated-singularity bounds", "[regularity]") {
  const auto e1 = regularity_and_Ik(negative_tau_table());
  CHECK(e1.reg == 6);
  std::vector<bool> pass;
  for (const auto& b : e1.inequalities) pass.push_back(b.pass);
  CHECK(pass == std::vector<bool>{true, true, false, false});

  const auto e2 = regularity_and_Ik(large_sigma_table());
  CHECK(e2.reg == 14);
  for (const auto& b : e2.inequalities) CHECK_FALSE(b.pass);

  const auto t = regularity_and_Ik(triangle_table());
  CHECK(t.reg == 2);
  CHECK(t.inequalities[0].pass);
  CHECK(t.inequalities[0].bound == 3);
  CHECK(t.inequalities[1].pass);
  CHECK(t.inequalities[1].bound == 4);
  CHECK(t.inequalities[2].pass);
  CHECK_FALSE(t.inequalities[2].top.has_value());
}

TEST_CASE("du Plessis-Wall bounds", "[bounds]") {
  const auto e2 = duplessis_wall_check(large_sigma_table());
  REQUIRE(e2);
  CHECK(e2->sigma_lower == -16);
  CHECK(e2->sigma_upper == 368);
  CHECK(e2->value == 392);
  CHECK_FALSE(e2->inside);

  const auto t = duplessis_wall_check(triangle_table());
  REQUIRE(t);
  CHECK(t->r == 1);
  CHECK(t->tau_lower == 4);
  CHECK(t->tau_upper == 6);
  CHECK(t->inside);

  const auto e1 = duplessis_wall_check(negative_tau_table());
  REQUIRE(e1);
  CHECK(e1->value == -208);
  CHECK_FALSE(e1->inside);

  CHECK_FALSE(duplessis_wall_check(koszul_smooth_table(3, 3)).has_value());
}

TEST_CASE("divisibility of N_t", "[divisibility]") {
  const auto e1 = divisibility_N_t(negative_tau_table(), 4);
  CHECK(e1.applicable);
  CHECK(e1.n_t == -192);
  CHECK(e1.divisible);
  const auto e2 = divisibility_N_t(large_sigma_table(), 4);
  CHECK(e2.n_t == 408);
  CHECK(e2.divisible);
  const auto t1 = divisibility_N_t(triangle_table(), 1);
  CHECK(t1.n_t == 0);
  CHECK(t1.divisible);
  CHECK_FALSE(divisibility_N_t(BettiTable(2, 3, {{2, 2}, {}}), 2).applicable);
}

TEST_CASE("divisibility holds on generated tables", "[divisibility][property]") {
  testing::DivisibilityTableGenerator gen(20240601);
  int exceptions = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto g = gen.next();
    const auto p = sigma_profile(g.table);
    REQUIRE(p.sigma[0] == p.expected[0]);
    for (int j = 1; j < std::max(2, g.t); ++j) REQUIRE(p.sigma[static_cast<std::size_t>(j)] == p.expected[static_cast<std::size_t>(j)]);
    const auto dv = divisibility_N_t(g.table, g.t);
    REQUIRE(dv.applicable);
    if (!dv.divisible) ++exceptions;
    // Exact division of deg Sigma whenever the relations reach n - delta - 1.
    const auto dim = singular_dimension(g.table);
    if (dim.kind == DimensionVerdict::Kind::Singular) REQUIRE(degree_of_sigma(g.table, dim.delta).integral);
  }
  CHECK(exceptions == 0);
}

TEST_CASE("structural checks", "[structural]") {
  for (const auto& c : structural_checks(negative_tau_table())) CHECK_FALSE(c.obstruction);
  const auto tri = structural_checks(triangle_table());
  CHECK(tri[2].status == Status::Pass);
  CHECK(tri[2].detail == "3 > 2");

  // d_{2,1} equal to the third smallest entry of column 1.
  const auto bad = structural_checks(BettiTable(3, 3, {{1, 1, 2, 2, 2}, {2, 3}, {}}));
  CHECK(bad[2].status == Status::Fail);
  CHECK(bad[2].obstruction);

  const auto cone = structural_checks(BettiTable(2, 3, {{0, 2, 2}, {3}}));
  CHECK(cone[0].status == Status::Info);
  CHECK(cone[0].detail.starts_with("CONE"));

  const auto free_table = structural_checks(BettiTable(2, 3, {{1, 1}, {}}));
  CHECK(free_table[1].status == Status::Info);
  CHECK(free_table[1].detail.starts_with("FREE"));
  CHECK(structural_checks(BettiTable(3, 3, {{1, 1}, {}, {}}))[1].status == Status::Fail);
}

TEST_CASE("projective dimension against codimension", "[pd]") {
  const auto t = pd_codim_check(triangle_table(), 0);
  CHECK(t.pd == 3);
  CHECK(t.pass);
  const auto e1 = pd_codim_check(negative_tau_table(), 0);
  CHECK(e1.pd == 5);
  CHECK(e1.pass);
  const auto short_table = pd_codim_check(BettiTable(4, 3, {{2, 2, 2, 2, 2}, {3, 3, 3}, {}, {}}), 0);
  CHECK(short_table.pd == 3);
  CHECK_FALSE(short_table.pass);
}

TEST_CASE("HSPOG detection", "[hspog]") {
  const auto h = hspog_detect(BettiTable(3, 4, {{1, 1, 2, 2}, {3}, {}}));
  CHECK(h.hspog);
  CHECK(h.matching_index == 3);
  CHECK(h.other_sum == 4);
  CHECK(h.other_sum_is_d);
  CHECK(sigma(BettiTable(3, 4, {{1, 1, 2, 2}, {3}, {}}), 0) == 3);
  CHECK(sigma(BettiTable(3, 4, {{1, 1, 2, 2}, {3}, {}}), 1) == 3);
  CHECK_FALSE(hspog_detect(triangle_table()).hspog);
  CHECK_FALSE(hspog_detect(negative_tau_table()).hspog);
}

TEST_CASE("HSPOG dimension guarantee", "[hspog]") {
  CHECK(hspog_dim_guarantee(3, 4).guaranteed);
  CHECK_FALSE(hspog_dim_guarantee(3, 3).guaranteed);
  const auto g45 = hspog_dim_guarantee(4, 5);
  CHECK_FALSE(g45.guaranteed);
  CHECK(g45.g == -11);
  CHECK(g45.threshold == "4*(5 + sqrt(5))/5");
  CHECK(g45.threshold_decimal == "5.78");
  CHECK(hspog_dim_guarantee(4, 6).guaranteed);
  CHECK(hspog_dim_guarantee(5, 10).guaranteed);
  CHECK(hspog_dim_guarantee(3, 4).threshold == "3");
  CHECK_THROWS(hspog_dim_guarantee(2, 5));

  for (long n = 3; n <= 50; ++n) {
    for (long d = 3; d <= 200; ++d) {
      const long g = (n + 1) * d * d - 2 * n * (n + 1) * d + 4 * n * n;
      const auto r = hspog_dim_guarantee(static_cast<int>(n), static_cast<int>(d));
      REQUIRE(r.g == g);
      REQUIRE(r.guaranteed == (g > 0));
    }
  }
}

TEST_CASE("full reports", "[report]") {
  const auto e1 = full_report(negative_tau_table());
  CHECK(e1.verdict.kind == Verdict::Kind::Inconsistent);
  CHECK(e1.delta == 0);
  CHECK(e1.degree_sigma == -8);
  CHECK(e1.tau == -8);
  CHECK(e1.reg == 6);
  CHECK(e1.pd == 5);
  CHECK(find_check(e1, "degree_positive").status == Status::Fail);
  CHECK(find_check(e1, "regularity_I3").status == Status::Fail);
  CHECK(find_check(e1, "regularity_I4").status == Status::Fail);
  CHECK(find_check(e1, "regularity_I2").status == Status::Pass);
  CHECK(find_check(e1, "duplessis_wall").status == Status::Fail);
  CHECK(e1.obstructions.size() == 4);

  const auto e2 = full_report(large_sigma_table());
  CHECK(e2.verdict.kind == Verdict::Kind::Inconsistent);
  CHECK(e2.degree_sigma == 17);
  CHECK(find_check(e2, "degree_positive").status == Status::Pass);
  for (int k = 1; k <= 4; ++k) CHECK(find_check(e2, "regularity_I" + std::to_string(k)).status == Status::Fail);
  CHECK(find_check(e2, "duplessis_wall").witness.at("sigma_upper") == "368");
  CHECK(e2.obstructions.size() == 5);

  const auto tri = full_report(triangle_table());
  CHECK(tri.verdict.kind == Verdict::Kind::Singular);
  CHECK(tri.realizable());
  CHECK(tri.tau == 6);

  // Checks conditioned on isolated singularities are not applicable otherwise.
  const auto line = full_report(BettiTable(3, 3, {{1, 1, 2, 2, 2, 2}, {3, 3, 3, 3}, {4}}));
  CHECK(line.verdict.kind == Verdict::Kind::Singular);
  CHECK(line.delta == 1);
  CHECK(find_check(line, "regularity_I1").status == Status::NotApplicable);
  CHECK(find_check(line, "duplessis_wall").status == Status::NotApplicable);
  CHECK_FALSE(line.tau.has_value());
}

TEST_CASE("checks are invariant under reordering within columns", "[property]") {
  std::mt19937_64 rng(9);
  for (const auto& t : {negative_tau_table(), large_sigma_table(), triangle_table()}) {
    auto cols = t.columns();
    for (auto& c : cols) std::shuffle(c.begin(), c.end(), rng);
    const BettiTable shuffled(t.n(), t.d(), cols);
    CHECK(shuffled == t);
    CHECK(sigmas(shuffled) == sigmas(t));
    CHECK(full_report(shuffled).obstructions == full_report(t).obstructions);
  }
}
