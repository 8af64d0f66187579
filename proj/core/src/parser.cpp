#include "gjps/parser.hpp"

#include <cctype>

namespace gjps {

namespace {

// Recursive descent over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | name | '(' expr ')'
//   rational := nat ('/' nat)?
// Unary minus is only allowed in front of a term, as emitted by the printer.
class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& variables)
      : text_(text), variables_(variables), arity_(static_cast<int>(variables.size())) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  Polynomial expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_space();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        Polynomial t = term();
        acc = c == '+' ? acc + t : acc - t;
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_space();
    if (peek() != '^') return b;
    ++pos_;
    skip_space();
    size_t at = pos_;
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer literal");
    long e = integer_literal();
    skip_space();
    if (peek() == '/' || peek() == '.') {
      pos_ = at;
      fail("non-integer exponent");
    }
    return b.pow(static_cast<int>(e));
  }

  Polynomial base() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  Polynomial rational_literal() {
    Integer num = natural();
    skip_space();
    if (peek() == '/') {
      size_t slash = pos_;
      ++pos_;
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = slash;
        fail("expected integer denominator after '/'");
      }
      Integer den = natural();
      if (den == 0) {
        pos_ = slash;
        fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(arity_, q);
    }
    return Polynomial::constant(arity_, Rational(num));
  }

  Polynomial variable() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name = text_.substr(start, pos_ - start);
    for (int i = 0; i < arity_; ++i) {
      if (variables_[static_cast<size_t>(i)] == name) return Polynomial::variable(arity_, i);
    }
    pos_ = start;
    fail("unknown variable '" + name + "'");
  }

  Integer natural() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(text_.substr(start, pos_ - start));
  }

  long integer_literal() {
    Integer n = natural();
    if (!n.fits_slong_p()) fail("exponent literal too large");
    return n.get_si();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  const std::string& text_;
  const std::vector<std::string>& variables_;
  int arity_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
  if (variables.size() < 2 || variables.size() > Monomial::kMaxVars) {
    throw std::invalid_argument("parser supports 2 or 3 variables");
  }
  return Parser(text, variables).parse();
}

}  // namespace gjps
