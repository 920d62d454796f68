#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "singulus/cli.hpp"
#include "singulus/digest.hpp"
#include "singulus/parse.hpp"
#include "singulus/squarefree.hpp"

namespace singulus::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Polynomial files may carry '#' comment lines.
std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    out += line + "\n";
  }
  return out;
}

Format parse_format(const std::string& s) { return s == "text" ? Format::Text : Format::Json; }

int analyze_betti(const std::string& path, Format format, std::ostream& out) {
  const std::string text = read_file(path);
  const auto doc = read_table_document(text);
  const auto report = rules::full_report(doc.table);
  out << render_table_report(doc, report, sha256_hex(text), format);
  return report.realizable() ? kExitOk : kExitObstructed;
}

struct PolyArgs {
  std::string file;
  std::string expr;
  std::optional<std::size_t> n;
  std::optional<unsigned> max_degree;
  std::vector<std::uint32_t> primes;
  std::optional<unsigned> window;
  unsigned threads = 1;
  unsigned squarefree_trials = 3;
  std::string format = "json";
};

int inspect_poly(const PolyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.file.empty() == a.expr.empty()) throw InputError("give exactly one of a file or --expr");
  const std::string text = a.expr.empty() ? strip_comments(read_file(a.file)) : a.expr;
  const auto f = a.n ? poly::parse(text, *a.n) : poly::parse(text);

  oracle::OracleOptions opts;
  opts.primes = a.primes;
  opts.threads = std::max(1u, a.threads);
  opts.max_degree = a.max_degree;
  opts.window = a.window;

  PolyInspection in;
  in.polynomial = f.to_string();
  in.n = static_cast<int>(f.n());
  in.input_digest = sha256_hex(text);
  in.max_degree_option = a.max_degree;
  in.window_option = a.window;
  // Validation errors (non-homogeneous, degree, cone) surface from the oracle.
  in.check = oracle::cross_check(f, opts);
  if (a.squarefree_trials > 0 && !poly::is_squarefree(f, {.trials = a.squarefree_trials}))
    in.warnings.push_back("f appears to have a repeated factor; the statements on reduced hypersurfaces do not apply");
  for (const auto& w : in.warnings) err << "warning: " << w << '\n';

  out << render_poly_report(in, parse_format(a.format));
  const bool obstructed = in.check.rules && !in.check.rules->realizable();
  return in.check.consistent() && !obstructed ? kExitOk : kExitObstructed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Betti numbers of Jacobian algebras: rule engine and exact oracle", "singulus"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  std::string format = "json";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  std::string table_path;
  auto* analyze = app.add_subcommand("analyze-betti", "Run every check on a Betti table document");
  analyze->add_option("file", table_path, "Betti table document (JSON)")->required();
  add_format(analyze);

  PolyArgs pa;
  auto* inspect = app.add_subcommand("inspect-poly", "Compute Hilbert and Betti data of a form and cross-check them");
  inspect->add_option("file", pa.file, "File holding the polynomial");
  inspect->add_option("--expr", pa.expr, "Polynomial given inline");
  inspect->add_option("--n", pa.n, "Index of the last variable (default: largest index used, at least 2)");
  inspect->add_option("--max-degree", pa.max_degree, "Last internal degree of the Betti computation");
  inspect->add_option("--prime", pa.primes, "Working prime below 2^31 (repeatable)")->take_all();
  inspect->add_option("--window", pa.window, "Last degree of the Hilbert window");
  inspect->add_option("--threads", pa.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  inspect->add_option("--squarefree-trials", pa.squarefree_trials, "Random lines for the squarefree test (0 skips it)");
  add_format(inspect);

  int sn = 0, sd = 0;
  auto* smooth = app.add_subcommand("smooth-table", "Print the Betti table of a smooth hypersurface");
  smooth->add_option("n", sn, "Dimension of the ambient projective space (n >= 2)")->required();
  smooth->add_option("d", sd, "Degree (d >= 3)")->required();

  int hn = 0, hd = 0;
  auto* hspog = app.add_subcommand("hspog", "Decide whether HSPOG forces dim Sigma = n - 2");
  hspog->add_option("n", hn, "n >= 3")->required();
  hspog->add_option("d", hd, "d >= 3")->required();
  add_format(hspog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) return analyze_betti(table_path, parse_format(format), out);
    if (*inspect) {
      pa.format = format;
      return inspect_poly(pa, out, err);
    }
    if (*smooth) {
      if (sn < 2 || sd < 3) throw InputError("smooth-table needs n >= 2 and d >= 3");
      out << write_table_document({rules::koszul_smooth_table(sn, sd), std::nullopt, std::nullopt});
      return kExitOk;
    }
    if (*hspog) {
      if (hn < 3 || hd < 3) throw InputError("hspog needs n >= 3 and d >= 3");
      out << render_hspog(rules::hspog_dim_guarantee(hn, hd), parse_format(format));
      return kExitOk;
    }
  } catch (const SchemaError& e) {
    err << "error: invalid table document: " << e.what() << '\n';
  } catch (const poly::ParseError& e) {
    err << "error: parse error at byte " << e.offset() << ": " << e.what() << '\n';
  } catch (const oracle::OracleError& e) {
    err << "error: " << oracle::code_name(e.code()) << ": " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInput;
}

}  // namespace singulus::cli
