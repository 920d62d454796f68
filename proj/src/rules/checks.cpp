#include <algorithm>
#include <stdexcept>

#include "singulus/rules.hpp"

namespace singulus::rules {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::NotApplicable:
      return "not-applicable";
    case Status::Info:
      return "info";
  }
  return "unknown";
}

Regularity regularity_and_Ik(const BettiTable& table) {
  Regularity out;
  const std::int64_t n = table.n();
  const std::int64_t d = table.d();
  for (int k = 1; k <= table.n(); ++k) {
    const auto& col = table.column(k);
    RegularityBound b{k, std::nullopt, n * (d - 2) + k - 1, true};
    if (!col.empty()) {
      b.top = col.back();
      b.pass = *b.top <= b.bound;
      const std::int64_t r = *b.top + d - 1 - k - 1;
      out.reg = out.reg ? std::max(*out.reg, r) : r;
    }
    out.inequalities.push_back(b);
  }
  return out;
}

namespace {

mpz_class pow_z(long base, unsigned long e) {
  mpz_class r;
  const mpz_class b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

std::optional<DuPlessisWall> duplessis_wall_check(const BettiTable& table) {
  const auto dim = singular_dimension(table);
  if (dim.kind != DimensionVerdict::Kind::Singular || dim.delta != 0) return std::nullopt;
  if (table.column(1).empty()) return std::nullopt;

  const auto n = static_cast<unsigned long>(table.n());
  const long d = table.d();
  DuPlessisWall w;
  w.r = table.column(1).front();
  mpz_class nf;
  mpz_fac_ui(nf.get_mpz_t(), n);

  const mpz_class top = pow_z(d - 1, n);
  w.tau_lower = top - w.r * pow_z(d - 1, n - 1);
  w.tau_upper = top - w.r * (d - w.r - 1) * pow_z(d - 1, n - 2);
  // Multiply through by n! and cancel one (d-1)^n.
  w.sigma_lower = nf * w.tau_lower - top;
  w.sigma_upper = nf * w.tau_upper - top;

  const mpz_class s = sigma(table, table.n());
  w.value = (n % 2 == 0) ? s : mpz_class(-s);
  w.inside = w.sigma_lower <= w.value && w.value <= w.sigma_upper;
  return w;
}

std::vector<Check> structural_checks(const BettiTable& table) {
  std::vector<Check> out;
  const int n = table.n();

  {
    Check c;
    c.name = "cone";
    c.rule = "d_{1,1} >= 0, with equality exactly for cones";
    if (table.column(1).empty()) {
      c.status = Status::NotApplicable;
      c.detail = "first column is empty";
    } else {
      const auto r = table.column(1).front();
      c.witness = {{"d_1_1", std::to_string(r)}};
      c.status = r == 0 ? Status::Info : Status::Pass;
      c.detail = r == 0 ? "CONE: d_{1,1} = 0" : "not a cone";
    }
    out.push_back(std::move(c));
  }
  {
    Check c;
    c.name = "generators";
    c.rule = "m_1 >= n, with equality exactly for free hypersurfaces";
    const auto m1 = table.m(1);
    c.witness = {{"m_1", std::to_string(m1)}, {"n", std::to_string(n)}};
    bool higher_empty = true;
    for (int k = 2; k <= n; ++k) higher_empty = higher_empty && table.m(k) == 0;
    if (m1 < static_cast<std::size_t>(n)) {
      c.status = Status::Fail;
      c.obstruction = true;
      c.detail = "m_1 = " + std::to_string(m1) + " < n";
    } else if (m1 == static_cast<std::size_t>(n) && higher_empty) {
      c.status = Status::Info;
      c.detail = "FREE: m_1 = n and no higher syzygies";
    } else {
      c.status = Status::Pass;
      c.detail = "m_1 >= n";
    }
    out.push_back(std::move(c));
  }
  for (int j = 2; j <= n; ++j) {
    Check c;
    c.name = "syzygy_support_" + std::to_string(j);
    c.rule = "if m_j > 0 then m_{j-1} >= 3 and d_{j,1} > max(d_{j-1,1}, d_{j-1,2}, d_{j-1,3})";
    if (table.m(j) == 0) {
      c.status = Status::NotApplicable;
      c.detail = "column " + std::to_string(j) + " is empty";
      out.push_back(std::move(c));
      continue;
    }
    const auto& prev = table.column(j - 1);
    const auto lowest = table.column(j).front();
    c.witness = {{"m_prev", std::to_string(prev.size())}, {"d_j_1", std::to_string(lowest)}};
    if (prev.size() < 3) {
      c.status = Status::Fail;
      c.detail = "m_" + std::to_string(j - 1) + " = " + std::to_string(prev.size()) + " < 3";
    } else {
      const auto third = prev[2];  // sorted, so the max of the first three
      c.witness["max_prev_three"] = std::to_string(third);
      if (lowest > third) {
        c.status = Status::Pass;
        c.detail = std::to_string(lowest) + " > " + std::to_string(third);
      } else {
        c.status = Status::Fail;
        c.detail = std::to_string(lowest) + " <= " + std::to_string(third);
      }
    }
    c.obstruction = c.status == Status::Fail;
    out.push_back(std::move(c));
  }
  return out;
}

int projective_dimension(const BettiTable& table) {
  int top = 0;
  for (int k = 1; k <= table.n(); ++k)
    if (table.m(k) > 0) top = k;
  return top + 1;
}

PdCodim pd_codim_check(const BettiTable& table, int delta) {
  if (delta < 0 || delta > table.n()) throw std::out_of_range("pd_codim_check: delta out of range");
  PdCodim out;
  out.pd = projective_dimension(table);
  out.codim = table.n() - delta;
  out.pass = out.pd >= out.codim;
  return out;
}

}  // namespace singulus::rules
