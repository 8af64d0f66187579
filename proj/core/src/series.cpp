#include "gjps/series.hpp"

#include <stdexcept>

namespace gjps {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

IntPoly IntPoly::constant(Integer c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::monomial(long power, Integer c) {
  if (power < 0) throw std::invalid_argument("negative power");
  std::vector<Integer> v(static_cast<size_t>(power) + 1, Integer(0));
  v.back() = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_tk(long k) {
  return IntPoly::constant(1) - IntPoly::monomial(k);
}

Integer IntPoly::coefficient(long k) const {
  if (k < 0 || k > degree()) return 0;
  return coefficients_[static_cast<size_t>(k)];
}

void IntPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
  std::vector<Integer> v(std::max(coefficients_.size(), other.coefficients_.size()), Integer(0));
  for (size_t i = 0; i < coefficients_.size(); ++i) v[i] += coefficients_[i];
  for (size_t i = 0; i < other.coefficients_.size(); ++i) v[i] += other.coefficients_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& other) const { return *this + (-other); }

IntPoly IntPoly::operator-() const {
  std::vector<Integer> v = coefficients_;
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
  if (is_zero() || other.is_zero()) return IntPoly();
  std::vector<Integer> v(coefficients_.size() + other.coefficients_.size() - 1, Integer(0));
  for (size_t i = 0; i < coefficients_.size(); ++i) {
    for (size_t j = 0; j < other.coefficients_.size(); ++j) {
      v[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = 0; k <= degree(); ++k) {
    Integer c = coefficient(k);
    if (c == 0) continue;
    std::string term;
    Integer mag = abs(c);
    if (k == 0) {
      term = mag.get_str();
    } else {
      term = (mag == 1 ? std::string() : mag.get_str() + "*") + "t" +
             (k == 1 ? std::string() : "^" + std::to_string(k));
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

RationalSeries::RationalSeries() : num_(), den_(IntPoly::constant(1)) {}

RationalSeries::RationalSeries(IntPoly numerator, IntPoly denominator, long shift)
    : num_(std::move(numerator)), den_(std::move(denominator)), shift_(shift) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  if (den_.coefficient(0) == 0) {
    throw std::invalid_argument("denominator must have nonzero constant term (use shift)");
  }
  if (num_.is_zero()) {
    den_ = IntPoly::constant(1);
    shift_ = 0;
  }
}

RationalSeries RationalSeries::zero() { return RationalSeries(); }

RationalSeries RationalSeries::from_poly(IntPoly p) {
  return RationalSeries(std::move(p), IntPoly::constant(1));
}

RationalSeries RationalSeries::operator+(const RationalSeries& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  long s = std::min(shift_, other.shift_);
  IntPoly a = IntPoly::monomial(shift_ - s) * num_ * other.den_;
  IntPoly b = IntPoly::monomial(other.shift_ - s) * other.num_ * den_;
  return RationalSeries(a + b, den_ * other.den_, s);
}

RationalSeries RationalSeries::operator-(const RationalSeries& other) const {
  return *this + RationalSeries(-other.num_, other.den_, other.shift_);
}

RationalSeries RationalSeries::operator*(const RationalSeries& other) const {
  if (is_zero() || other.is_zero()) return zero();
  return RationalSeries(num_ * other.num_, den_ * other.den_, shift_ + other.shift_);
}

RationalSeries RationalSeries::shifted(long k) const {
  if (is_zero()) return zero();
  return RationalSeries(num_, den_, shift_ + k);
}

bool RationalSeries::equals(const RationalSeries& other) const {
  long s = std::min(shift_, other.shift_);
  IntPoly a = IntPoly::monomial(shift_ - s) * num_ * other.den_;
  IntPoly b = IntPoly::monomial(other.shift_ - s) * other.num_ * den_;
  return a == b;
}

std::vector<Integer> RationalSeries::expand(long max_grade) const {
  if (max_grade < 0) throw std::invalid_argument("negative truncation");
  // num/den first, indices then moved by shift.
  long need = max_grade - shift_;
  std::vector<Integer> base;
  if (need >= 0 && !num_.is_zero()) {
    Integer d0 = den_.coefficient(0);
    if (d0 != 1 && d0 != -1) {
      throw std::logic_error("series denominator must have unit constant term");
    }
    base.resize(static_cast<size_t>(need) + 1, Integer(0));
    for (long k = 0; k <= need; ++k) {
      Integer acc = num_.coefficient(k);
      for (long j = 1; j <= std::min<long>(k, den_.degree()); ++j) {
        acc -= den_.coefficient(j) * base[static_cast<size_t>(k - j)];
      }
      base[static_cast<size_t>(k)] = d0 == 1 ? acc : -acc;
    }
  }
  // Negative powers must vanish.
  for (long k = 0; k < -shift_ && k < static_cast<long>(base.size()); ++k) {
    if (base[static_cast<size_t>(k)] != 0) {
      throw std::logic_error("series has a nonzero coefficient at a negative grade");
    }
  }
  std::vector<Integer> out(static_cast<size_t>(max_grade) + 1, Integer(0));
  for (long g = 0; g <= max_grade; ++g) {
    long k = g - shift_;
    if (k >= 0 && k < static_cast<long>(base.size())) out[static_cast<size_t>(g)] = base[static_cast<size_t>(k)];
  }
  return out;
}

std::string RationalSeries::to_string() const {
  if (is_zero()) return "0";
  std::string out = "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  if (shift_ != 0) out = "t^" + std::to_string(shift_) + " * " + out;
  return out;
}

long SeriesTruncation::at(long grade) const {
  long idx = grade - offset;
  if (idx < 0 || idx >= static_cast<long>(coefficients.size())) return 0;
  return coefficients[static_cast<size_t>(idx)];
}

}  // namespace gjps
