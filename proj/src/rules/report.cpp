#include "singulus/rules.hpp"

namespace singulus::rules {

std::string_view verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Smooth:
      return "smooth";
    case Verdict::Kind::Singular:
      return "singular";
    case Verdict::Kind::Inconsistent:
      return "inconsistent";
  }
  return "unknown";
}

namespace {

std::string str(const mpq_class& q) { return q.get_str(); }

Check not_applicable(std::string name, std::string rule, std::string why) {
  Check c;
  c.name = std::move(name);
  c.rule = std::move(rule);
  c.status = Status::NotApplicable;
  c.detail = std::move(why);
  return c;
}

void add_regularity_checks(SingularReport& rep, const BettiTable& table, bool isolated) {
  const auto reg = regularity_and_Ik(table);
  rep.reg = reg.reg;
  for (const auto& b : reg.inequalities) {
    const std::string name = "regularity_I" + std::to_string(b.k);
    const std::string rule = "d_{" + std::to_string(b.k) + ",m} <= n(d-2) + " + std::to_string(b.k) +
                             " - 1 for isolated singularities";
    if (!isolated) {
      rep.checks.push_back(not_applicable(name, rule, "needs delta = 0"));
      continue;
    }
    Check c;
    c.name = name;
    c.rule = rule;
    c.witness = {{"bound", std::to_string(b.bound)}, {"top", b.top ? std::to_string(*b.top) : "none"}};
    c.status = b.pass ? Status::Pass : Status::Fail;
    c.obstruction = !b.pass;
    c.detail = b.top ? std::to_string(*b.top) + (b.pass ? " <= " : " > ") + std::to_string(b.bound)
                     : "empty column";
    if (!b.pass)
      rep.obstructions.push_back("regularity bound (I_" + std::to_string(b.k) + ") fails: " + c.detail);
    rep.checks.push_back(std::move(c));
  }
}

}  // namespace

SingularReport full_report(const BettiTable& table) {
  SingularReport rep;
  rep.n = table.n();
  rep.d = table.d();
  rep.sigma = sigma_profile(table);
  rep.pd = projective_dimension(table);

  Check euler = euler_consistency(table);
  const bool euler_ok = euler.status == Status::Pass;
  if (!euler_ok) rep.obstructions.push_back("Euler relations fail: " + euler.detail);
  rep.checks.push_back(std::move(euler));

  const auto dim = singular_dimension(table);
  {
    Check c;
    c.name = "singular_dimension";
    c.rule = "delta = n - j for the first j with sigma_j != (-1)^(j+1) (d-1)^j";
    c.status = Status::Info;
    c.detail = dim.reason;
    if (rep.sigma.first_mismatch) c.witness["first_mismatch"] = std::to_string(*rep.sigma.first_mismatch);
    if (dim.kind == DimensionVerdict::Kind::Singular) c.witness["delta"] = std::to_string(dim.delta);
    rep.checks.push_back(std::move(c));
  }

  const bool singular = euler_ok && dim.kind == DimensionVerdict::Kind::Singular;
  if (singular) {
    rep.delta = dim.delta;
    const auto deg = degree_of_sigma(table, dim.delta);
    rep.degree_sigma = deg.value;
    if (dim.delta == 0) rep.tau = deg.value;

    Check c;
    c.name = "degree_positive";
    c.rule = "deg Sigma = ((d-1)^c + (-1)^c sigma_c)/c! > 0, c = n - delta";
    c.witness = {{"degree_sigma", str(deg.value)}, {"codim", std::to_string(table.n() - dim.delta)}};
    c.status = deg.positive ? Status::Pass : Status::Fail;
    c.obstruction = !deg.positive;
    c.detail = "deg Sigma = " + str(deg.value);
    if (!deg.positive) rep.obstructions.push_back("deg Sigma = " + str(deg.value) + " is not positive");
    rep.checks.push_back(std::move(c));
    if (!deg.integral) {
      Check e;
      e.name = "degree_integral";
      e.rule = "deg Sigma is an integer";
      e.status = Status::Fail;
      e.obstruction = true;
      e.detail = "INTERNAL_ERROR: inexact division";
      rep.obstructions.push_back("deg Sigma = " + str(deg.value) + " is not an integer");
      rep.checks.push_back(std::move(e));
    }
  } else {
    rep.checks.push_back(not_applicable("degree_positive", "deg Sigma > 0",
                                        dim.kind == DimensionVerdict::Kind::Smooth ? "smooth" : "inconsistent table"));
  }

  for (int t = 1; t <= table.n(); ++t) {
    auto div = divisibility_N_t(table, t);
    Check c;
    c.name = "divisibility_t" + std::to_string(t);
    c.rule = "t! divides N_t = (d-1)^t + (-1)^t sigma_t when sigma_j matches for j < t";
    if (!div.applicable) {
      c.status = Status::NotApplicable;
      c.detail = "sigma relations fail below t";
    } else {
      c.witness = {{"N_t", div.n_t.get_str()}};
      c.status = div.divisible ? Status::Pass : Status::Fail;
      c.obstruction = !div.divisible;
      c.detail = "N_" + std::to_string(t) + " = " + div.n_t.get_str();
      if (!div.divisible)
        rep.obstructions.push_back(std::to_string(t) + "! does not divide N_" + std::to_string(t) + " = " +
                                   div.n_t.get_str());
      rep.divisibility.push_back(div);
    }
    rep.checks.push_back(std::move(c));
  }

  const bool isolated = singular && dim.delta == 0;
  add_regularity_checks(rep, table, isolated);

  if (auto w = isolated ? duplessis_wall_check(table) : std::nullopt) {
    Check c;
    c.name = "duplessis_wall";
    c.rule = "du Plessis-Wall bounds on tau, in sigma form: lower <= (-1)^n sigma_n <= upper";
    c.witness = {{"r", w->r.get_str()},
                 {"sigma_lower", w->sigma_lower.get_str()},
                 {"sigma_upper", w->sigma_upper.get_str()},
                 {"tau_lower", w->tau_lower.get_str()},
                 {"tau_upper", w->tau_upper.get_str()},
                 {"value", w->value.get_str()}};
    c.status = w->inside ? Status::Pass : Status::Fail;
    c.obstruction = !w->inside;
    c.detail = "(-1)^n sigma_n = " + w->value.get_str() + (w->inside ? " in [" : " outside [") +
               w->sigma_lower.get_str() + ", " + w->sigma_upper.get_str() + "]";
    if (rep.tau)
      c.detail += ", tau = " + str(*rep.tau) + (w->inside ? " in [" : " outside [") + w->tau_lower.get_str() +
                  ", " + w->tau_upper.get_str() + "]";
    if (!w->inside) rep.obstructions.push_back("du Plessis-Wall bound violated: " + c.detail);
    rep.checks.push_back(std::move(c));
  } else {
    rep.checks.push_back(not_applicable("duplessis_wall", "du Plessis-Wall bounds", "needs delta = 0"));
  }

  for (auto& c : structural_checks(table)) {
    if (c.obstruction) rep.obstructions.push_back("structural check " + c.name + " fails: " + c.detail);
    rep.checks.push_back(std::move(c));
  }

  if (singular) {
    const auto pc = pd_codim_check(table, dim.delta);
    Check c;
    c.name = "pd_codim";
    c.rule = "pd M(f) = max{k : m_k > 0} + 1 >= codim Sigma = n - delta";
    c.witness = {{"pd", std::to_string(pc.pd)}, {"codim", std::to_string(pc.codim)}};
    c.status = pc.pass ? Status::Pass : Status::Fail;
    c.obstruction = !pc.pass;
    c.detail = "pd = " + std::to_string(pc.pd) + (pc.pass ? " >= " : " < ") + std::to_string(pc.codim);
    if (!pc.pass) rep.obstructions.push_back("projective dimension below codimension: " + c.detail);
    rep.checks.push_back(std::move(c));
  } else {
    rep.checks.push_back(not_applicable("pd_codim", "pd M(f) >= codim Sigma", "needs a singular verdict"));
  }

  {
    const auto h = hspog_detect(table);
    Check c;
    c.name = "hspog";
    c.rule = "m_1 = n+1, m_2 = 1, d_{2,1} = d_{1,i} + 1, nothing beyond";
    c.status = Status::Info;
    c.detail = h.hspog ? "HSPOG" : "not HSPOG";
    if (h.matching_index) c.witness["matching_index"] = std::to_string(*h.matching_index);
    if (h.other_sum) {
      c.witness["other_sum"] = std::to_string(*h.other_sum);
      c.witness["other_sum_is_d"] = h.other_sum_is_d ? "true" : "false";
    }
    rep.checks.push_back(std::move(c));
  }
  {
    Check c;
    c.name = "koszul_shape";
    c.rule = "smooth shape: m_k = binom(n+1, k+1) and every d_{k,i} = k(d-1)";
    c.status = Status::Info;
    const bool shape = table == koszul_smooth_table(table.n(), table.d());
    c.detail = shape ? "table has the Koszul shape" : "table differs from the Koszul shape";
    rep.checks.push_back(std::move(c));
  }

  if (euler_ok) rep.hilbert_polynomial = hilbert_polynomial_from_table(table);

  if (!rep.obstructions.empty()) {
    rep.verdict.kind = Verdict::Kind::Inconsistent;
    rep.verdict.reason = "not realizable as stated";
  } else if (dim.kind == DimensionVerdict::Kind::Smooth) {
    rep.verdict.kind = Verdict::Kind::Smooth;
    rep.verdict.reason = dim.reason;
  } else {
    rep.verdict.kind = Verdict::Kind::Singular;
    rep.verdict.reason = "delta = " + std::to_string(dim.delta) + ", deg Sigma = " + str(*rep.degree_sigma);
  }
  return rep;
}

}  // namespace singulus::rules
