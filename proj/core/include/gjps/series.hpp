#pragma once

#include <string>
#include <vector>

#include "gjps/rational.hpp"
#include "gjps/weight_system.hpp"

namespace gjps {

/// Dense integer polynomial in the formal variable t.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);
  static IntPoly constant(Integer c);
  static IntPoly monomial(long power, Integer c = 1);
  // 1 - t^k
  static IntPoly one_minus_tk(long k);

  bool is_zero() const { return coefficients_.empty(); }
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  Integer coefficient(long k) const;
  const std::vector<Integer>& coefficients() const { return coefficients_; }

  IntPoly operator+(const IntPoly& other) const;
  IntPoly operator-(const IntPoly& other) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& other) const;
  bool operator==(const IntPoly& other) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coefficients_;  // coefficients_[k] multiplies t^k
};

/// t^shift * num/den with den(0) = +-1, so truncated expansion stays in
/// exact integer arithmetic. Laurent shifts appear transiently in the
/// sequence algebra; expansions check that no negative power survives.
class RationalSeries {
 public:
  RationalSeries();  // zero
  RationalSeries(IntPoly numerator, IntPoly denominator, long shift = 0);
  static RationalSeries zero();
  static RationalSeries from_poly(IntPoly p);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  long shift() const { return shift_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalSeries operator+(const RationalSeries& other) const;
  RationalSeries operator-(const RationalSeries& other) const;
  RationalSeries operator*(const RationalSeries& other) const;
  RationalSeries shifted(long k) const;  // multiply by t^k
  bool equals(const RationalSeries& other) const;

  // Coefficients of t^0 .. t^max_grade. Throws if a negative power has a
  // nonzero coefficient.
  std::vector<Integer> expand(long max_grade) const;

  std::string to_string() const;

 private:
  IntPoly num_;
  IntPoly den_;
  long shift_ = 0;
};

/// Exact truncation of a graded dimension series.
struct SeriesTruncation {
  long offset = 0;                 // grade of coefficients[0]
  std::vector<long> coefficients;  // all entries >= 0

  long max_grade() const { return offset + static_cast<long>(coefficients.size()) - 1; }
  long at(long grade) const;
};

}  // namespace gjps
