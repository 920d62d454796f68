#include "singulus/parse.hpp"

#include <cctype>
#include <limits>

namespace singulus::poly {

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  Polynomial run() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty input");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  static bool starts_atom(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(';
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc *= power();
      } else if (starts_atom(peek())) {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    if (at_end()) throw ParseError(at, "expected exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(at, "non-numeric exponent");
    const unsigned long e = integer("exponent");
    if (e == 0) throw ParseError(at, "exponent must be at least 1");
    if (e > kMaxExponent) throw ParseError(at, "exponent too large");
    return base.pow(static_cast<unsigned>(e));
  }

  Polynomial atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (at_end()) throw ParseError(at, "unexpected end of input");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError(pos_, "expected variable index after 'x'");
      const unsigned long idx = integer("variable index");
      if (idx > n_)
        throw ParseError(at, "variable x" + std::to_string(idx) + " out of range (n = " +
                                 std::to_string(n_) + ")");
      return Polynomial::variable(n_, idx);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(n_, number());
    throw ParseError(at, std::string("unexpected character '") + c + "'");
  }

  mpq_class number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    mpz_class num(std::string(text_.substr(start, pos_ - start)));
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      const std::size_t ds = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (ds == pos_) throw ParseError(ds, "expected denominator");
      den = mpz_class(std::string(text_.substr(ds, pos_ - ds)));
      if (den == 0) throw ParseError(ds, "zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  unsigned long integer(const char* what) {
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const unsigned digit = static_cast<unsigned>(peek() - '0');
      if (v > (std::numeric_limits<unsigned long>::max() - digit) / 10)
        throw ParseError(start, std::string(what) + " too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    std::size_t v = 0;
    bool any = false;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 100000) {
      v = v * 10 + static_cast<std::size_t>(text[j] - '0');
      any = true;
      ++j;
    }
    if (any) best = std::max(best, v);
  }
  return best;
}

}  // namespace

Polynomial parse(std::string_view text, std::size_t n) { return Parser(text, n).run(); }

Polynomial parse(std::string_view text) {
  return parse(text, std::max<std::size_t>(2, max_variable_index(text)));
}

}  // namespace singulus::poly
