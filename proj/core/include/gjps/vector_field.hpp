#pragma once

#include <string>
#include <vector>

#include "gjps/polynomial.hpp"

namespace gjps {

/// Triple (or planar pair) of polynomials over a shared variable set.
///
/// One carrier serves Omega^1, Omega^2, X^1 and X^2: the paper identifies all
/// four with A^3, and the space kind lives in the grading layer, not here.
/// Dimension always equals the component arity (3 spatial, 2 planar).
class VectorField {
 public:
  explicit VectorField(std::vector<Polynomial> components);
  static VectorField zero(int dimension);
  static VectorField spatial(Polynomial a, Polynomial b, Polynomial c);
  static VectorField planar(Polynomial a, Polynomial b);

  int dimension() const { return static_cast<int>(components_.size()); }
  int arity() const { return components_[0].arity(); }
  const Polynomial& operator[](int i) const { return components_[static_cast<size_t>(i)]; }
  bool is_zero() const;

  VectorField operator+(const VectorField& other) const;
  VectorField operator-(const VectorField& other) const;
  VectorField operator-() const;
  VectorField operator*(const Rational& c) const;
  bool operator==(const VectorField& other) const = default;

  std::string to_string() const;

 private:
  std::vector<Polynomial> components_;
};

VectorField operator*(const Polynomial& f, const VectorField& g);
VectorField operator*(const Rational& c, const VectorField& g);

}  // namespace gjps
