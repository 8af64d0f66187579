#include "gjps/homology.hpp"

#include <stdexcept>

#include "gjps/parallel.hpp"

namespace gjps {

SliceRank op_rank_at(ComplexMap op, long source_grade, const GjpsStructure& s) {
  GradedOperatorMatrix m = operator_matrix(op, source_grade, s);
  auto rk = m.matrix.rank_kernel();
  SliceRank out;
  out.source_dim = m.source.dimension();
  out.target_dim = m.target.dimension();
  out.rank = rk.rank;
  out.kernel_dim = static_cast<long>(rk.kernel.size());
  if (out.rank + out.kernel_dim != out.source_dim) {
    throw std::logic_error("rank-nullity violated");  // elimination bug, not input error
  }
  return out;
}

std::map<long, SliceRank> op_rank_table(ComplexMap op, long lo, long hi, const GjpsStructure& s) {
  if (hi < lo) return {};
  std::vector<SliceRank> rows(static_cast<size_t>(hi - lo + 1));
  parallel_for(hi - lo + 1, [&](long k) { rows[static_cast<size_t>(k)] = op_rank_at(op, lo + k, s); });
  std::map<long, SliceRank> table;
  for (long g = lo; g <= hi; ++g) table[g] = rows[static_cast<size_t>(g - lo)];
  return table;
}

namespace {

constexpr std::array<ComplexMap, 3> kBoundaries{ComplexMap::Boundary1, ComplexMap::Boundary2,
                                                ComplexMap::Boundary3};
constexpr std::array<ComplexMap, 3> kCoboundaries{ComplexMap::Coboundary0, ComplexMap::Coboundary1,
                                                  ComplexMap::Coboundary2};

}  // namespace

SeriesTruncation homology_dims(int i, long max_grade, const GjpsStructure& s) {
  if (i < 0 || i > 3) throw std::invalid_argument("homology index");
  s.require_section5("homology_dims");
  const WeightSystem& w = s.weights();
  long sigma = s.shift();

  // Kernel side: boundary_i on the form-grade-d slice (full slice for i=0,
  // Omega^0 at form grade d is just A_d).
  std::map<long, SliceRank> ker_table;
  if (i > 0) {
    ker_table = op_rank_table(kBoundaries[static_cast<size_t>(i - 1)], form_to_slice_grade(0, w),
                              form_to_slice_grade(max_grade, w), s);
  }
  // Image side: boundary_{i+1} from form grade d - sigma.
  std::map<long, SliceRank> im_table;
  if (i < 3) {
    im_table = op_rank_table(kBoundaries[static_cast<size_t>(i)], form_to_slice_grade(-sigma, w),
                             form_to_slice_grade(max_grade - sigma, w), s);
  }

  SeriesTruncation out;
  out.offset = 0;
  for (long d = 0; d <= max_grade; ++d) {
    long kernel = i == 0 ? slice_dimension(d, w)
                         : ker_table.at(form_to_slice_grade(d, w)).kernel_dim;
    long image = i == 3 ? 0 : im_table.at(form_to_slice_grade(d - sigma, w)).rank;
    long dim = kernel - image;
    if (dim < 0) throw std::logic_error("negative homology dimension");
    out.coefficients.push_back(dim);
  }
  return out;
}

std::array<SeriesTruncation, 4> all_homology_dims(long max_grade, const GjpsStructure& s) {
  std::array<SeriesTruncation, 4> out;
  for (int i = 0; i < 4; ++i) out[static_cast<size_t>(i)] = homology_dims(i, max_grade, s);
  return out;
}

SeriesTruncation cohomology_dims(int i, long min_grade, long max_grade, const GjpsStructure& s) {
  if (i < 0 || i > 3) throw std::invalid_argument("cohomology index");
  if (max_grade < min_grade) throw std::invalid_argument("empty grade range");
  const WeightSystem& w = s.weights();
  long sigma = s.shift();

  std::map<long, SliceRank> ker_table;
  if (i < 3) {
    ker_table = op_rank_table(kCoboundaries[static_cast<size_t>(i)], min_grade, max_grade, s);
  }
  std::map<long, SliceRank> im_table;
  if (i > 0) {
    im_table = op_rank_table(kCoboundaries[static_cast<size_t>(i - 1)], min_grade - sigma,
                             max_grade - sigma, s);
  }

  SeriesTruncation out;
  out.offset = min_grade;
  for (long d = min_grade; d <= max_grade; ++d) {
    long kernel = 0;
    if (i == 3) {
      // X^3_d = A_{d+|w|}; delta^3 = 0.
      kernel = slice_dimension(d + w.total(), w);
    } else {
      kernel = ker_table.at(d).kernel_dim;
    }
    long image = i == 0 ? 0 : im_table.at(d - sigma).rank;
    long dim = kernel - image;
    if (dim < 0) throw std::logic_error("negative cohomology dimension");
    out.coefficients.push_back(dim);
  }
  return out;
}

std::array<SeriesTruncation, 4> all_cohomology_dims(long max_grade, const GjpsStructure& s) {
  std::array<SeriesTruncation, 4> out;
  long lo = -s.weights().total();
  for (int i = 0; i < 4; ++i) out[static_cast<size_t>(i)] = cohomology_dims(i, lo, max_grade, s);
  return out;
}

RationalSeries closed_form_series(int i) {
  IntPoly den = IntPoly::one_minus_tk(2) * IntPoly::one_minus_tk(1);
  switch (i) {
    case 0:  // (-t^2 + 2t + 1) / ((1-t^2)(1-t))
      return RationalSeries(IntPoly({1, 2, -1}), den);
    case 1:  // t(2t^2 + t + 1) / ((1-t^2)(1-t)), as printed
      return RationalSeries(IntPoly({0, 1, 1, 2}), den);
    case 2:  // 2t^3 / ((1-t^2)(1-t))
      return RationalSeries(IntPoly({0, 0, 0, 2}), den);
    case 3:
      return RationalSeries::zero();
    default:
      throw std::invalid_argument("homology index");
  }
}

RationalSeries algebra_series(const WeightSystem& w) {
  IntPoly den = IntPoly::constant(1);
  for (int i = 0; i < w.arity(); ++i) den = den * IntPoly::one_minus_tk(w.weight(i));
  return RationalSeries(IntPoly::constant(1), den);
}

RationalSeries omega_form_series(int k, const WeightSystem& w) {
  RationalSeries pa = algebra_series(w);
  switch (k) {
    case 0:
      return pa;
    case 1: {
      IntPoly sum;
      for (int i = 0; i < 3; ++i) sum = sum + IntPoly::monomial(w.weight(i));
      return RationalSeries::from_poly(sum) * pa;
    }
    case 2: {
      IntPoly sum;
      for (int i = 0; i < 3; ++i) sum = sum + IntPoly::monomial(w.total() - w.weight(i));
      return RationalSeries::from_poly(sum) * pa;
    }
    case 3:
      return pa.shifted(w.total());
    default:
      throw std::invalid_argument("form index");
  }
}

RationalSeries kernel_series(int i, const GjpsStructure& s) {
  const WeightSystem& w = s.weights();
  long wp = s.casimir_degree();
  RationalSeries pa = algebra_series(w);
  RationalSeries casimirs(IntPoly::constant(1), IntPoly::one_minus_tk(wp));
  switch (i) {
    case 0:
      return pa;  // boundary_0 = 0 on Omega^0
    case 1:
      // 0 -> K[P] -> A(-w(P)) (+) A -> ker d1 -> 0
      return pa.shifted(wp) + pa - casimirs;
    case 2:
      // 0 -> K[P](-w(P)) -> A(-w(P)) -> ker d2 -> 0
      return pa.shifted(wp) - casimirs.shifted(wp);
    case 3:
      return RationalSeries::zero();  // Ker boundary_3 = 0
    default:
      throw std::invalid_argument("homology index");
  }
}

RationalSeries series_from_sequences(int i, const GjpsStructure& s) {
  if (i < 0 || i > 3) throw std::invalid_argument("homology index");
  if (i == 3) return RationalSeries::zero();
  // 0 -> ker d_{i+1} -> Omega^{i+1} -> ker d_i -> PH_i -> 0, the middle arrow
  // shifting the form grade by sigma.
  RationalSeries image =
      (omega_form_series(i + 1, s.weights()) - kernel_series(i + 1, s)).shifted(s.shift());
  return kernel_series(i, s) - image;
}

bool euler_consistency_check(const std::array<SeriesTruncation, 4>& homology, long max_grade,
                             const GjpsStructure& s) {
  long sigma = s.shift();
  RationalSeries omega_side = RationalSeries::zero();
  for (int k = 0; k < 4; ++k) {
    RationalSeries term = omega_form_series(k, s.weights()).shifted(k * sigma);
    omega_side = k % 2 == 0 ? omega_side + term : omega_side - term;
  }
  // With a negative shift the identity at grade d reads homology above d;
  // stay within the computed truncations.
  long usable = sigma < 0 ? max_grade + 3 * sigma : max_grade;
  if (usable < 0) return false;
  std::vector<Integer> expected = omega_side.expand(usable);
  for (long d = 0; d <= usable; ++d) {
    Integer lhs = 0;
    for (int k = 0; k < 4; ++k) {
      long grade = d - k * sigma;
      lhs += (k % 2 == 0 ? 1 : -1) * Integer(homology[static_cast<size_t>(k)].at(grade));
    }
    if (lhs != expected[static_cast<size_t>(d)]) return false;
  }
  return true;
}

}  // namespace gjps
