#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gjps {

/// Exponent vector of a monomial in 2 or 3 variables.
///
/// The total order is graded lexicographic with x > y > z: first by total
/// degree, ties broken by comparing exponents of x, then y, then z. Every
/// deterministic basis and reduced representative in the engine relies on
/// this order.
class Monomial {
 public:
  static constexpr int kMaxVars = 3;

  explicit Monomial(int arity);
  Monomial(std::initializer_list<int> exponents);
  static Monomial unit(int arity) { return Monomial(arity); }
  static Monomial variable(int arity, int var);
  static Monomial from_exponents(const std::vector<int>& exponents);

  int arity() const { return arity_; }
  int exponent(int var) const { return exponents_[static_cast<size_t>(var)]; }
  int total_degree() const;
  bool is_unit() const { return total_degree() == 0; }

  Monomial times(const Monomial& other) const;
  Monomial derivative_exponents(int var) const;  // exponent of var reduced by one
  bool divisible_by(int var) const { return exponent(var) > 0; }

  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::array<int, kMaxVars> exponents_{};
  int arity_;
};

const std::vector<std::string>& default_variable_names(int arity);

}  // namespace gjps
