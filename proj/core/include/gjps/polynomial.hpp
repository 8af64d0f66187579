#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gjps/monomial.hpp"
#include "gjps/rational.hpp"
#include "gjps/weight_system.hpp"

namespace gjps {

/// Sparse multivariate polynomial with exact rational coefficients, the ring
/// element of A = K[x,y,z] and B = K[x,y].
///
/// Invariants: no stored zero coefficients; all exponent vectors share the
/// polynomial's arity. Values are immutable in spirit: every operation
/// returns a fresh polynomial, so sharing across threads is safe.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(int arity) : arity_(arity) {}
  static Polynomial zero(int arity) { return Polynomial(arity); }
  static Polynomial constant(int arity, const Rational& c);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  static Polynomial variable(int arity, int var);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  long term_count() const { return static_cast<long>(terms_.size()); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& other) const;

  Polynomial derivative(int var) const;
  Polynomial pow(int n) const;

  int total_degree() const;  // -1 for the zero polynomial

  struct WeightDegree {
    // degree is empty for the zero polynomial (the paper's "-infinity").
    std::optional<long> degree;
    bool homogeneous = true;
  };
  WeightDegree weight_degree(const WeightSystem& w) const;

  // Restriction to one weighted-degree slice.
  Polynomial graded_part(long grade, const WeightSystem& w) const;

  // Canonical printer: terms in descending graded-lex order, `a/b` rationals.
  // parse_polynomial(to_string(p)) == p.
  std::string to_string() const;
  std::string to_string(const std::vector<std::string>& names) const;

  // Internal builder used by arithmetic and the parser.
  void add_term(const Monomial& m, const Rational& c);

 private:
  TermMap terms_;
  int arity_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

}  // namespace gjps
