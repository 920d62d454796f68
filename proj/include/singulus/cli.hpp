#pragma once

// Command-line front end: Betti table documents, report rendering and the
// subcommands of the `singulus` tool.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "singulus/betti_table.hpp"
#include "singulus/oracle.hpp"
#include "singulus/rules.hpp"

namespace singulus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitObstructed = 2;

std::string_view tool_version();

/// A malformed table document; `field()` is a JSON-pointer-like path such
/// as "columns[2].degrees[0]".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct BettiTableDocument {
  BettiTable table;
  std::optional<std::string> label;
  std::optional<std::string> source;
};

/// Parses a JSON table document:
///
///     {"n": 4, "d": 3, "columns": [{"k": 1, "degrees": [2, 2, 3]}, ...],
///      "label": "...", "source": "..."}
///
/// Columns that are not listed are empty. Unknown keys are rejected.
BettiTableDocument read_table_document(std::string_view text);

/// Canonical form: keys sorted, every k from 1 to n listed in order, sorted
/// degrees, one column per line, trailing newline.
std::string write_table_document(const BettiTableDocument& doc);

enum class Format { Json, Text };

/// Report of the rule engine on a table document.
std::string render_table_report(const BettiTableDocument& doc, const rules::SingularReport& report,
                                std::string_view input_digest, Format format);

struct PolyInspection {
  std::string polynomial;  ///< canonical text
  int n = 0;
  std::string input_digest;
  oracle::CrossCheck check;
  std::vector<std::string> warnings;
  std::optional<unsigned> max_degree_option;
  std::optional<unsigned> window_option;
};

std::string render_poly_report(const PolyInspection& inspection, Format format);

std::string render_hspog(const rules::HspogGuarantee& g, Format format);

/// Entry point of the tool. Returns the process exit code: 0 consistent,
/// 1 input or usage error, 2 obstruction or deviation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace singulus::cli
