#include "gjps/singularity.hpp"

#include <algorithm>
#include <stdexcept>

#include "gjps/rational_matrix.hpp"

namespace gjps {

namespace {

SparseVec coordinates(const Polynomial& p, const GradedSliceBasis& basis) {
  SparseVec v;
  for (const auto& [m, c] : p.terms()) {
    auto it = std::lower_bound(basis.monomials.begin(), basis.monomials.end(), m);
    if (it == basis.monomials.end() || !(*it == m)) {
      throw std::logic_error("polynomial term outside the expected slice");
    }
    v.set(it - basis.monomials.begin(), c);
  }
  return v;
}

// Span of the degree-d slice of the ideal <generators> inside A_d.
SpanChecker ideal_slice_span(const std::vector<Polynomial>& generators, const WeightSystem& w,
                             long grade, const GradedSliceBasis& ambient) {
  SpanChecker span(ambient.dimension());
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    auto info = g.weight_degree(w);
    if (!info.homogeneous) throw std::invalid_argument("ideal generators must be weight homogeneous");
    GradedSliceBasis cofactors = monomial_basis(grade - *info.degree, w);
    for (const auto& m : cofactors.monomials) {
      span.add(coordinates(g * Polynomial::monomial(m, 1), ambient));
    }
  }
  return span;
}

}  // namespace

std::vector<long> graded_quotient_dims(const std::vector<Polynomial>& generators,
                                       const WeightSystem& w, long bound) {
  std::vector<long> dims;
  dims.reserve(static_cast<size_t>(bound) + 1);
  for (long d = 0; d <= bound; ++d) {
    GradedSliceBasis ambient = monomial_basis(d, w);
    SpanChecker span = ideal_slice_span(generators, w, d, ambient);
    dims.push_back(ambient.dimension() - span.dim());
  }
  return dims;
}

std::vector<long> jacobian_quotient_dims(const Polynomial& p, const WeightSystem& w, long bound) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < p.arity(); ++i) gens.push_back(p.derivative(i));
  return graded_quotient_dims(gens, w, bound);
}

std::vector<Monomial> quotient_slice_basis(const std::vector<Polynomial>& generators,
                                           const WeightSystem& w, long grade) {
  GradedSliceBasis ambient = monomial_basis(grade, w);
  SpanChecker span = ideal_slice_span(generators, w, grade, ambient);
  std::vector<Monomial> reps;
  for (size_t i = 0; i < ambient.monomials.size(); ++i) {
    SparseVec unit;
    unit.set(static_cast<long>(i), 1);
    if (span.add(unit)) reps.push_back(ambient.monomials[i]);
  }
  return reps;
}

SingularityRing analyze_singularity(const Polynomial& p, const WeightSystem& w) {
  auto info = p.weight_degree(w);
  if (!info.degree || !info.homogeneous) {
    throw std::invalid_argument("singularity analysis needs a nonzero weight-homogeneous polynomial");
  }
  SingularityRing ring;
  ring.cutoff = static_cast<long>(p.arity()) * *info.degree - 2 * w.total() + 1;
  long window_end = std::max(ring.cutoff + w.max_weight() - 1, 0L);

  std::vector<Polynomial> gens;
  for (int i = 0; i < p.arity(); ++i) gens.push_back(p.derivative(i));
  ring.quotient_dims = graded_quotient_dims(gens, w, window_end);

  bool isolated = true;
  for (long d = std::max(ring.cutoff, 0L); d <= window_end; ++d) {
    if (ring.quotient_dims[static_cast<size_t>(d)] != 0) isolated = false;
  }
  if (isolated) {
    long mu = 0;
    for (long d = 0; d < std::min(ring.cutoff, window_end + 1); ++d) {
      mu += ring.quotient_dims[static_cast<size_t>(d)];
    }
    ring.milnor = mu;
    for (long d = 0; d < ring.cutoff; ++d) {
      if (ring.quotient_dims[static_cast<size_t>(d)] == 0) continue;
      for (const auto& m : quotient_slice_basis(gens, w, d)) ring.basis.push_back(m);
    }
  }
  return ring;
}

std::optional<long> milnor_number(const Polynomial& p, const WeightSystem& w) {
  return analyze_singularity(p, w).milnor;
}

std::vector<Monomial> sing_basis(const Polynomial& p, const WeightSystem& w) {
  SingularityRing ring = analyze_singularity(p, w);
  if (!ring.milnor) throw std::invalid_argument("NON_ISOLATED: no finite singularity basis");
  return ring.basis;
}

bool regular_sequence_check(const Polynomial& lambda, const Polynomial& p, const WeightSystem& w,
                            long bound) {
  if (lambda.is_zero() || p.is_zero()) return false;
  auto li = lambda.weight_degree(w);
  auto pi = p.weight_degree(w);
  if (!li.homogeneous || !pi.homogeneous) return false;
  // Proper ideal at grade 0: no homogeneous unit among the generators.
  if (*li.degree == 0 || *pi.degree == 0) return false;

  long wl = *li.degree, wp = *pi.degree;
  for (long d = 0; d <= bound; ++d) {
    GradedSliceBasis source = monomial_basis(d, w);
    if (source.dimension() == 0) continue;
    GradedSliceBasis target = monomial_basis(d + wl, w);

    SpanChecker p_in_source(source.dimension());
    for (const auto& m : monomial_basis(d - wp, w).monomials) {
      p_in_source.add(coordinates(p * Polynomial::monomial(m, 1), source));
    }
    SpanChecker mod_target(target.dimension());
    for (const auto& m : monomial_basis(d + wl - wp, w).monomials) {
      mod_target.add(coordinates(p * Polynomial::monomial(m, 1), target));
    }
    long rank_mod = 0;
    for (const auto& m : source.monomials) {
      if (mod_target.add(coordinates(lambda * Polynomial::monomial(m, 1), target))) ++rank_mod;
    }
    // Injective on the quotient iff the rank equals dim (A/(P))_d.
    if (rank_mod != source.dimension() - p_in_source.dim()) return false;
  }
  return true;
}

}  // namespace gjps
