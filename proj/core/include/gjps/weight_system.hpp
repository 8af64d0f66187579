#pragma once

#include <optional>
#include <vector>

#include "gjps/monomial.hpp"

namespace gjps {

/// Positive integer weights for the variables, normalized so that their gcd
/// is 1. |w| denotes the sum of the weights. A 2-variable instance carries
/// the planar weights used for K[x,y].
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<int> weights);
  WeightSystem(std::initializer_list<int> weights)
      : WeightSystem(std::vector<int>(weights)) {}

  int arity() const { return static_cast<int>(weights_.size()); }
  int weight(int var) const { return weights_[static_cast<size_t>(var)]; }
  const std::vector<int>& weights() const { return weights_; }
  int total() const { return total_; }
  int max_weight() const;

  long degree(const Monomial& m) const;

  bool operator==(const WeightSystem&) const = default;

 private:
  std::vector<int> weights_;
  int total_ = 0;
};

/// Complete sorted list of the exponent vectors of one weighted-degree slice.
struct GradedSliceBasis {
  long grade = 0;
  std::vector<Monomial> monomials;  // graded-lex ascending

  long dimension() const { return static_cast<long>(monomials.size()); }
};

// All monomials of weighted degree `grade`; empty basis for negative grades.
GradedSliceBasis monomial_basis(long grade, const WeightSystem& w);

// dim A_d without enumerating the basis (coin-counting recurrence; equals the
// coefficient of t^d in prod 1/(1-t^{w_i})).
long slice_dimension(long grade, const WeightSystem& w);

}  // namespace gjps
