#include <sstream>

#include <json.hpp>

#include "singulus/cli.hpp"

namespace singulus::cli {

using nlohmann::json;

std::string_view tool_version() { return SINGULUS_VERSION; }

namespace {

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
json exact(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json exact(const mpq_class& q) {
  if (q.get_den() == 1) return exact(q.get_num());
  return q.get_str();
}

template <class T>
json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, mpz_class> || std::is_same_v<T, mpq_class>)
    return exact(*v);
  else
    return *v;
}

json exact_list(const auto& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(exact(v));
  return out;
}

json tool_json() { return {{"name", "singulus"}, {"version", std::string(tool_version())}}; }

json table_json(const BettiTable& t) {
  json cols = json::array();
  for (int k = 1; k <= t.n(); ++k) cols.push_back({{"k", k}, {"degrees", t.column(k)}});
  return {{"n", t.n()}, {"d", t.d()}, {"columns", cols}};
}

const char* const kIndexNote =
    "the smooth reference table places binom(n+1, k+1) shifts k(d-1) in column k, as the Koszul complex "
    "on the partials requires; indexing by binom(n+1, k) would contradict sigma_0 = n";

json report_json(const rules::SingularReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"status", std::string(rules::status_name(c.status))},
                      {"obstruction", c.obstruction},
                      {"rule", c.rule},
                      {"detail", c.detail},
                      {"witness", c.witness}});
  }
  json divisibility = json::array();
  for (const auto& dv : r.divisibility)
    divisibility.push_back({{"t", dv.t}, {"N_t", exact(dv.n_t)}, {"divisible", dv.divisible}});
  return {{"verdict", std::string(rules::verdict_name(r.verdict.kind))},
          {"reason", r.verdict.reason},
          {"realizable", r.realizable()},
          {"sigma", exact_list(r.sigma.sigma)},
          {"expected_sigma", exact_list(r.sigma.expected)},
          {"first_mismatch", optional_json(r.sigma.first_mismatch)},
          {"delta", optional_json(r.delta)},
          {"degree_sigma", optional_json(r.degree_sigma)},
          {"tau", optional_json(r.tau)},
          {"pd", r.pd},
          {"reg", optional_json(r.reg)},
          {"divisibility", divisibility},
          {"hilbert_polynomial", exact_list(r.hilbert_polynomial)},
          {"checks", checks},
          {"obstructions", r.obstructions},
          {"notes", json::array({kIndexNote})}};
}

std::string str(const mpq_class& q) { return q.get_str(); }

template <class T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "-";
  if constexpr (std::is_same_v<T, mpz_class> || std::is_same_v<T, mpq_class>)
    return v->get_str();
  else
    return std::to_string(*v);
}

std::string poly_text(const std::vector<mpq_class>& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    std::string c = str(abs(p[i]));
    const bool neg = p[i] < 0;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (i == 0) {
      s += c;
      continue;
    }
    if (c != "1") s += c + "*";
    s += i == 1 ? "k" : "k^" + std::to_string(i);
  }
  return s;
}

void table_text(std::ostream& o, const BettiTable& t) {
  o << "betti table (n = " << t.n() << ", d = " << t.d() << ")\n";
  for (int k = 1; k <= t.n(); ++k) {
    o << "  d_" << k << " (m_" << k << " = " << t.m(k) << "):";
    // Run-length form keeps long columns readable: 2x10 means ten 2s.
    const auto& col = t.column(k);
    for (std::size_t i = 0; i < col.size();) {
      std::size_t j = i;
      while (j < col.size() && col[j] == col[i]) ++j;
      o << ' ' << col[i];
      if (j - i > 1) o << 'x' << (j - i);
      i = j;
    }
    o << '\n';
  }
}

void report_text(std::ostream& o, const rules::SingularReport& r) {
  o << "verdict: " << rules::verdict_name(r.verdict.kind) << " (" << r.verdict.reason << ")\n";
  o << "sigma:";
  for (const auto& s : r.sigma.sigma) o << ' ' << s.get_str();
  o << "\nexpected:";
  for (const auto& s : r.sigma.expected) o << ' ' << s.get_str();
  o << "\ndelta: " << opt_text(r.delta) << "\ndeg Sigma: " << opt_text(r.degree_sigma)
    << "\ntau: " << opt_text(r.tau) << "\npd: " << r.pd << "\nreg: " << opt_text(r.reg)
    << "\nhilbert polynomial: " << poly_text(r.hilbert_polynomial) << "\n\nchecks:\n";
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    std::string status(rules::status_name(c.status));
    o << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << status
      << std::string(status.size() < 15 ? 15 - status.size() : 1, ' ') << c.detail << '\n';
  }
  o << "\nobstructions:";
  if (r.obstructions.empty()) o << " none";
  o << '\n';
  for (const auto& s : r.obstructions) o << "  - " << s << '\n';
  o << "\nnote: " << kIndexNote << '\n';
}

}  // namespace

std::string render_table_report(const BettiTableDocument& doc, const rules::SingularReport& report,
                                std::string_view input_digest, Format format) {
  if (format == Format::Json) {
    json input = {{"digest", std::string(input_digest)}};
    if (doc.label) input["label"] = *doc.label;
    if (doc.source) input["source"] = *doc.source;
    json root = {{"tool", tool_json()}, {"input", input}, {"table", table_json(doc.table)}, {"report", report_json(report)}};
    return root.dump(2) + "\n";
  }
  std::ostringstream o;
  o << "singulus " << tool_version() << "\ninput sha256: " << input_digest << '\n';
  if (doc.label) o << "label: " << *doc.label << '\n';
  if (doc.source) o << "source: " << *doc.source << '\n';
  o << '\n';
  table_text(o, doc.table);
  o << '\n';
  report_text(o, report);
  return o.str();
}

std::string render_poly_report(const PolyInspection& in, Format format) {
  const auto& cc = in.check;
  const auto& h = cc.hilbert;
  if (format == Format::Json) {
    json hilbert = {{"values", h.values},
                    {"polynomial", exact_list(h.polynomial)},
                    {"stabilization", h.stabilization},
                    {"delta", optional_json(h.delta)},
                    {"degree_sigma", optional_json(h.degree_sigma)},
                    {"tjurina", optional_json(h.tjurina)},
                    {"primes", h.provenance.primes},
                    {"rational_fallback", h.provenance.rational_fallback}};
    json betti = nullptr;
    if (cc.betti) {
      json numbers = json::array();
      for (const auto& [pq, b] : cc.betti->betti) numbers.push_back({{"p", pq.first}, {"q", pq.second}, {"beta", b}});
      betti = {{"table", table_json(cc.betti->table)},
               {"graded", numbers},
               {"max_degree", cc.betti->max_degree},
               {"primes", cc.betti->provenance.primes},
               {"rational_fallback", cc.betti->provenance.rational_fallback}};
    }
    json root = {{"tool", tool_json()},
                 {"input", {{"digest", in.input_digest}, {"polynomial", in.polynomial}, {"n", in.n}}},
                 {"options", {{"max_degree", optional_json(in.max_degree_option)}, {"window", optional_json(in.window_option)}}},
                 {"hilbert", hilbert},
                 {"betti", betti},
                 {"report", cc.rules ? report_json(*cc.rules) : json(nullptr)},
                 {"deviations", cc.deviations},
                 {"warnings", in.warnings},
                 {"consistent", cc.consistent()}};
    return root.dump(2) + "\n";
  }
  std::ostringstream o;
  o << "singulus " << tool_version() << "\ninput sha256: " << in.input_digest << "\npolynomial: " << in.polynomial
    << "\nvariables: x0..x" << in.n << "\n";
  for (const auto& w : in.warnings) o << "warning: " << w << '\n';
  o << "\nhilbert function:";
  for (std::size_t k = 0; k < h.values.size(); ++k) o << (k ? ", " : " ") << h.values[k];
  o << "\nhilbert polynomial: " << poly_text(h.polynomial) << " (from k = " << h.stabilization << ")\n"
    << "delta: " << opt_text(h.delta) << "\ndeg Sigma: " << opt_text(h.degree_sigma)
    << "\ntjurina: " << opt_text(h.tjurina) << "\nprimes:";
  for (auto p : h.provenance.primes) o << ' ' << p;
  o << (h.provenance.rational_fallback ? " (rational fallback used)" : "") << "\n\n";
  if (cc.betti) {
    table_text(o, cc.betti->table);
    o << "graded betti numbers:";
    for (const auto& [pq, b] : cc.betti->betti) o << " b(" << pq.first << ',' << pq.second << ")=" << b;
    o << "\n\n";
  }
  if (cc.rules) {
    report_text(o, *cc.rules);
    o << '\n';
  }
  o << "cross-check: " << (cc.consistent() ? "consistent" : "deviations found") << '\n';
  for (const auto& dv : cc.deviations) o << "  - " << dv << '\n';
  return o.str();
}

std::string render_hspog(const rules::HspogGuarantee& g, Format format) {
  if (format == Format::Json) {
    json root = {{"tool", tool_json()},
                 {"n", g.n},
                 {"d", g.d},
                 {"g", exact(g.g)},
                 {"guaranteed", g.guaranteed},
                 {"threshold", g.threshold},
                 {"threshold_decimal", g.threshold_decimal}};
    return root.dump(2) + "\n";
  }
  std::ostringstream o;
  o << "n = " << g.n << ", d = " << g.d << "\n"
    << "g(d) = (n+1)d^2 - 2n(n+1)d + 4n^2 = " << g.g.get_str() << "\n"
    << "threshold d' = " << g.threshold << " ~ " << g.threshold_decimal << "\n"
    << (g.guaranteed ? "guaranteed: an HSPOG hypersurface with these n, d has dim Sigma = n - 2\n"
                     : "not guaranteed: g(d) <= 0\n");
  return o.str();
}

}  // namespace singulus::cli
