#pragma once

#include <optional>
#include <vector>

#include "gjps/polynomial.hpp"
#include "gjps/weight_system.hpp"

namespace gjps {

/// Graded data of a finite quotient ring A/I (or B/I), I generated by the
/// partial derivatives of one polynomial in the Jacobian case.
///
/// `milnor` is empty when the quotient is not finite-dimensional up to the
/// verification window (NON_ISOLATED). `basis` holds the reduced monomial
/// representatives: the smallest monomials in graded-lex order surviving the
/// slice eliminations, so they are identical across runs.
struct SingularityRing {
  std::vector<long> quotient_dims;  // indexed by grade, 0..window end
  std::vector<Monomial> basis;
  std::optional<long> milnor;
  long cutoff = 0;  // one past the quasi-homogeneous socle degree
};

// dim (A/<gens>)_d for every d <= bound; generators must be weight
// homogeneous (each slice of the ideal is then spanned by monomial multiples
// of the generators, one elimination per grade).
std::vector<long> graded_quotient_dims(const std::vector<Polynomial>& generators,
                                       const WeightSystem& w, long bound);

std::vector<long> jacobian_quotient_dims(const Polynomial& p, const WeightSystem& w, long bound);

// Reduced monomial representatives of (A/<gens>)_d.
std::vector<Monomial> quotient_slice_basis(const std::vector<Polynomial>& generators,
                                           const WeightSystem& w, long grade);

// Jacobian-quotient analysis with the socle-degree cutoff
// n*deg(P) - 2|w| + 1. Dimensions are checked on a window of length
// max(w_i) past the cutoff; any nonzero dimension there means NON_ISOLATED.
SingularityRing analyze_singularity(const Polynomial& p, const WeightSystem& w);

std::optional<long> milnor_number(const Polynomial& p, const WeightSystem& w);
std::vector<Monomial> sing_basis(const Polynomial& p, const WeightSystem& w);

// Bounded verification that (lambda, P) is a regular sequence: the ideal is
// proper at grade 0 and multiplication by lambda is injective on (A/(P))_d
// for all d <= bound.
bool regular_sequence_check(const Polynomial& lambda, const Polynomial& p, const WeightSystem& w,
                            long bound);

}  // namespace gjps
