#include <string>

#include "singulus/oracle.hpp"

namespace singulus::oracle {

namespace {

std::string opt_str(const std::optional<mpz_class>& v) { return v ? v->get_str() : "none"; }
std::string opt_str(const std::optional<mpq_class>& v) { return v ? v->get_str() : "none"; }
std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

std::string poly_str(const std::vector<mpq_class>& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += p[i].get_str() + (i == 0 ? "" : i == 1 ? "*k" : "*k^" + std::to_string(i));
  }
  return s;
}

}  // namespace

CrossCheck cross_check(const poly::Polynomial& f, const OracleOptions& options) {
  CrossCheck out{hilbert_fit(f, options), std::nullopt, std::nullopt, {}};
  try {
    out.betti = graded_betti(f, options);
  } catch (const OracleError& e) {
    if (e.code() != OracleError::Code::Incomplete) throw;
    out.deviations.push_back(std::string("Betti computation incomplete: ") + e.what());
    return out;
  }
  const auto& h = out.hilbert;
  const auto& table = out.betti->table;
  out.rules = rules::full_report(table);
  const auto& rep = *out.rules;

  std::optional<mpz_class> rules_degree;
  if (rep.degree_sigma && rep.degree_sigma->get_den() == 1) rules_degree = rep.degree_sigma->get_num();
  if (h.delta != rep.delta)
    out.deviations.push_back("delta: Hilbert fit gives " + opt_str(h.delta) + ", Betti table gives " +
                             opt_str(rep.delta));
  if (h.degree_sigma != rules_degree)
    out.deviations.push_back("deg Sigma: Hilbert fit gives " + opt_str(h.degree_sigma) + ", Betti table gives " +
                             opt_str(rep.degree_sigma));

  for (std::size_t k = 0; k < h.values.size(); ++k) {
    const mpz_class from_table = rules::hilbert_function_from_table(table, static_cast<long>(k));
    if (from_table != static_cast<unsigned long>(h.values[k]))
      out.deviations.push_back("Hilbert function at k = " + std::to_string(k) + ": computed " +
                               std::to_string(h.values[k]) + ", from table " + from_table.get_str());
  }
  if (h.polynomial != rep.hilbert_polynomial)
    out.deviations.push_back("Hilbert polynomial: fitted " + poly_str(h.polynomial) + ", from table " +
                             poly_str(rep.hilbert_polynomial));
  return out;
}

}  // namespace singulus::oracle
