#include "gjps/monomial.hpp"

#include <stdexcept>

namespace gjps {

Monomial::Monomial(int arity) : arity_(arity) {
  if (arity < 2 || arity > kMaxVars) {
    throw std::invalid_argument("monomial arity must be 2 or 3");
  }
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : arity_(static_cast<int>(exponents.size())) {
  if (arity_ < 2 || arity_ > kMaxVars) {
    throw std::invalid_argument("monomial arity must be 2 or 3");
  }
  int i = 0;
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    exponents_[static_cast<size_t>(i++)] = e;
  }
}

Monomial Monomial::variable(int arity, int var) {
  Monomial m(arity);
  if (var < 0 || var >= arity) throw std::out_of_range("variable index");
  m.exponents_[static_cast<size_t>(var)] = 1;
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& exponents) {
  Monomial m(static_cast<int>(exponents.size()));
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
    m.exponents_[i] = exponents[i];
  }
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (int i = 0; i < arity_; ++i) d += exponents_[static_cast<size_t>(i)];
  return d;
}

Monomial Monomial::times(const Monomial& other) const {
  if (other.arity_ != arity_) throw std::invalid_argument("arity mismatch in monomial product");
  Monomial r(arity_);
  for (int i = 0; i < arity_; ++i) {
    r.exponents_[static_cast<size_t>(i)] =
        exponents_[static_cast<size_t>(i)] + other.exponents_[static_cast<size_t>(i)];
  }
  return r;
}

Monomial Monomial::derivative_exponents(int var) const {
  Monomial r = *this;
  int& e = r.exponents_[static_cast<size_t>(var)];
  if (e == 0) throw std::logic_error("derivative of monomial without the variable");
  --e;
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (arity_ != other.arity_) return arity_ <=> other.arity_;
  int da = total_degree(), db = other.total_degree();
  if (da != db) return da <=> db;
  for (int i = 0; i < arity_; ++i) {
    int ea = exponents_[static_cast<size_t>(i)], eb = other.exponents_[static_cast<size_t>(i)];
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (int i = 0; i < arity_; ++i) {
    int e = exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names[static_cast<size_t>(i)];
    if (e > 1) out += "^" + std::to_string(e);
  }
  if (out.empty()) out = "1";
  return out;
}

const std::vector<std::string>& default_variable_names(int arity) {
  static const std::vector<std::string> three{"x", "y", "z"};
  static const std::vector<std::string> two{"x", "y"};
  switch (arity) {
    case 3: return three;
    default: return two;
  }
}

}  // namespace gjps
