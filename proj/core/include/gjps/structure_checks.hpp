#pragma once

#include <string>
#include <vector>

#include "gjps/homology.hpp"

namespace gjps {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Poincare-lemma solvers. Both integrate grade-by-grade along the Euler
// field; the result is verified by re-application. Throws
// std::invalid_argument when the input is not closed.
Polynomial grad_potential(const VectorField& field, const WeightSystem& w);
VectorField curl_potential(const VectorField& field, const WeightSystem& w);

// Kernel propositions at one form grade: every boundary_1 kernel element is
// grad F + G grad P, every boundary_2 kernel element is grad H x grad P, and
// boundary_3 has no kernel at all.
CheckResult kernel_structure_check(int k, long form_grade, const GjpsStructure& s);
std::vector<CheckResult> kernel_structure_suite(const GjpsStructure& s, long max_form_grade);

// Degree-by-degree verdicts for the structural lemmas, up to `bound`:
//  lemma_cas      ker(F -> grad F x grad P) = K[P] slicewise
//  lemma_reg      lambda F = P^r has no solution
//  lemma_lema     B = {box Q . grad Ptilde} (+) span{Ptilde^i theta_j}
//  prop_p1        A = {M . grad Q} (+) span{Ptilde^i lambda^j theta_k}
//  prop_p2        A = {grad P . curl G} (+) span{P^l mu_s}
//  lemma_lem1     sign identity of the weight arithmetic
//  lemma_lem2     (Ptilde^s - P^s) M lies in im delta^0
//  planar_lemma   ker(L -> box L . grad Ptilde) = K[Ptilde] slicewise
// Section-6 lemmas are skipped (marked not applicable) on section-5
// structures.
std::vector<CheckResult> lemma_suite(const GjpsStructure& s, long bound);

struct ModularReport {
  bool divergence_identity_ok = false;  // div X_f = M . grad f on the spanning set
  bool trivial = false;                 // M in im delta^0 (exact linear solve)
  VectorField field;
  std::string detail;
};

// spanning_degree: all monomials of total degree <= spanning_degree drive
// the divergence identity.
ModularReport modular_triviality_check(const GjpsStructure& s, int spanning_degree = 5);

// Cohomology structure theorems, compared dimension-by-dimension against the
// computed cohomology (X-grading, grades -|w|..max_grade).
CheckResult ph0_theorem_check(const GjpsStructure& s, long max_grade);
CheckResult ph1_theorem_check(const GjpsStructure& s, long max_grade);
CheckResult ph3_theorem_check(const GjpsStructure& s, long max_grade);

}  // namespace gjps
