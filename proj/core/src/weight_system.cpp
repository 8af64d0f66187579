#include "gjps/weight_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gjps {

WeightSystem::WeightSystem(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2 || weights_.size() > Monomial::kMaxVars) {
    throw std::invalid_argument("weight system needs 2 or 3 weights");
  }
  int g = 0;
  for (int w : weights_) {
    if (w < 1) throw std::invalid_argument("weights must be positive integers");
    g = std::gcd(g, w);
  }
  for (int& w : weights_) w /= g;
  total_ = std::accumulate(weights_.begin(), weights_.end(), 0);
}

int WeightSystem::max_weight() const {
  return *std::max_element(weights_.begin(), weights_.end());
}

long WeightSystem::degree(const Monomial& m) const {
  if (m.arity() != arity()) throw std::invalid_argument("arity mismatch");
  long d = 0;
  for (int i = 0; i < arity(); ++i) d += static_cast<long>(m.exponent(i)) * weight(i);
  return d;
}

namespace {

void enumerate(const WeightSystem& w, int var, long remaining, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (var == w.arity() - 1) {
    if (remaining % w.weight(var) == 0) {
      exps[static_cast<size_t>(var)] = static_cast<int>(remaining / w.weight(var));
      out.push_back(Monomial::from_exponents(exps));
    }
    return;
  }
  for (long e = 0; e * w.weight(var) <= remaining; ++e) {
    exps[static_cast<size_t>(var)] = static_cast<int>(e);
    enumerate(w, var + 1, remaining - e * w.weight(var), exps, out);
  }
}

}  // namespace

GradedSliceBasis monomial_basis(long grade, const WeightSystem& w) {
  GradedSliceBasis basis;
  basis.grade = grade;
  if (grade < 0) return basis;
  std::vector<int> exps(static_cast<size_t>(w.arity()), 0);
  enumerate(w, 0, grade, exps, basis.monomials);
  std::sort(basis.monomials.begin(), basis.monomials.end());
  return basis;
}

long slice_dimension(long grade, const WeightSystem& w) {
  if (grade < 0) return 0;
  std::vector<long> ways(static_cast<size_t>(grade) + 1, 0);
  ways[0] = 1;
  for (int i = 0; i < w.arity(); ++i) {
    for (long d = w.weight(i); d <= grade; ++d) {
      ways[static_cast<size_t>(d)] += ways[static_cast<size_t>(d - w.weight(i))];
    }
  }
  return ways[static_cast<size_t>(grade)];
}

}  // namespace gjps
