#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "singulus/polynomial.hpp"

namespace singulus::poly {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what);
  /// Byte offset into the input where parsing failed.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses and expands a polynomial over x0..xn.
///
/// Grammar (whitespace between tokens is ignored):
///
///     expr    = [ "+" | "-" ] term { ( "+" | "-" ) term }
///     term    = power { [ "*" ] power }
///     power   = atom [ "^" integer ]           integer >= 1
///     atom    = number | "x" integer | "(" expr ")"
///     number  = integer [ "/" integer ]
///
/// Throws ParseError for malformed text, for a variable index above n and
/// for a non-numeric exponent.
Polynomial parse(std::string_view text, std::size_t n);

/// Same, with n taken as the largest variable index that occurs (at least 2).
Polynomial parse(std::string_view text);

}  // namespace singulus::poly
