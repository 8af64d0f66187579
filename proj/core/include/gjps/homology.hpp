#pragma once

#include <array>
#include <map>

#include "gjps/operator_matrix.hpp"
#include "gjps/series.hpp"

namespace gjps {

/// Rank data of one complex arrow at one source grade.
struct SliceRank {
  long source_dim = 0;
  long target_dim = 0;
  long rank = 0;
  long kernel_dim = 0;  // source_dim - rank, re-checked by the elimination
};

SliceRank op_rank_at(ComplexMap op, long source_grade, const GjpsStructure& s);

// Rank table of `op` for source grades lo..hi, computed grade-parallel.
std::map<long, SliceRank> op_rank_table(ComplexMap op, long lo, long hi, const GjpsStructure& s);

/// Poisson homology dimensions, graded by the natural form grading on
/// Omega^i (PH_0 is indexed by polynomial degree). dim PH_i at grade d is
/// ker(boundary_i at d) minus rank(boundary_{i+1} landing at d).
SeriesTruncation homology_dims(int i, long max_grade, const GjpsStructure& s);
std::array<SeriesTruncation, 4> all_homology_dims(long max_grade, const GjpsStructure& s);

/// Poisson cohomology dimensions in the X-grading of the slice isomorphisms.
/// X^1..X^3 slices are nonempty down to grade -|w|; the truncation's offset
/// reports the first grade computed.
SeriesTruncation cohomology_dims(int i, long min_grade, long max_grade, const GjpsStructure& s);
std::array<SeriesTruncation, 4> all_cohomology_dims(long max_grade, const GjpsStructure& s);

// The paper's printed Poincare series for the quadratic case (weights
// (1,1,1), w(lambda)=1, w(P)=2), expandable to any truncation. The PH_1
// numerator is reproduced as printed; arbitration against the
// sequence-derived form happens in verify, not here.
RationalSeries closed_form_series(int i);

// P(A) = 1 / prod(1 - t^{w_i}) by polynomial degree.
RationalSeries algebra_series(const WeightSystem& w);
// P(Omega^k) in the natural form grading.
RationalSeries omega_form_series(int k, const WeightSystem& w);
// P(ker boundary_i) in the form grading, from the exact sequences.
RationalSeries kernel_series(int i, const GjpsStructure& s);
// P(PH_i) assembled from the three exact sequences; depends only on the
// weights, w(P) and the arrow shift.
RationalSeries series_from_sequences(int i, const GjpsStructure& s);

// Both sides of the Euler-characteristic identity
//   sum_k (-1)^k t^{k*sigma} P(Omega^k) = sum_i (-1)^i t^{i*sigma} P(PH_i),
// the right side evaluated on computed truncations. True when they agree on
// every grade <= max_grade.
bool euler_consistency_check(const std::array<SeriesTruncation, 4>& homology, long max_grade,
                             const GjpsStructure& s);

}  // namespace gjps
