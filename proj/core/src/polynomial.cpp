#include "gjps/polynomial.hpp"

#include <stdexcept>

namespace gjps {

Polynomial Polynomial::constant(int arity, const Rational& c) {
  Polynomial p(arity);
  p.add_term(Monomial::unit(arity), c);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.arity());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(int arity, int var) {
  return monomial(Monomial::variable(arity, var), 1);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
  return coefficient(Monomial::unit(arity_));
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.arity() != arity_) throw std::invalid_argument("arity mismatch in add_term");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.arity_ != arity_) throw std::invalid_argument("arity mismatch in +");
  Polynomial r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  if (other.arity_ != arity_) throw std::invalid_argument("arity mismatch in -");
  Polynomial r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(arity_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.arity_ != arity_) throw std::invalid_argument("arity mismatch in *");
  Polynomial r(arity_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      r.add_term(ma.times(mb), ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(arity_);
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

bool Polynomial::operator==(const Polynomial& other) const {
  return arity_ == other.arity_ && terms_ == other.terms_;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= arity_) throw std::out_of_range("variable index");
  Polynomial r(arity_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var);
    if (e == 0) continue;
    r.add_term(m.derivative_exponents(var), c * e);
  }
  return r;
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  Polynomial r = constant(arity_, 1);
  for (int i = 0; i < n; ++i) r = r * (*this);
  return r;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

Polynomial::WeightDegree Polynomial::weight_degree(const WeightSystem& w) const {
  WeightDegree result;
  for (const auto& [m, c] : terms_) {
    long d = w.degree(m);
    if (!result.degree) {
      result.degree = d;
    } else if (*result.degree != d) {
      result.homogeneous = false;
      result.degree = std::max(*result.degree, d);
    }
  }
  return result;
}

Polynomial Polynomial::graded_part(long grade, const WeightSystem& w) const {
  Polynomial r(arity_);
  for (const auto& [m, c] : terms_) {
    if (w.degree(m) == grade) r.terms_.emplace(m, c);
  }
  return r;
}

std::string Polynomial::to_string() const {
  return to_string(default_variable_names(arity_));
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending graded-lex: leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string ms = m.to_string(names);
    if (m.is_unit()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += ms;
    } else {
      out += rational_to_string(mag) + "*" + ms;
    }
  }
  return out;
}

}  // namespace gjps
