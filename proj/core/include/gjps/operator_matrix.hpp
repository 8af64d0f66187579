#pragma once

#include "gjps/complex_ops.hpp"
#include "gjps/slice_basis.hpp"

namespace gjps {

/// Named arrows of the four complexes. Boundary maps act on the Omega
/// carriers, coboundary maps on the X carriers; de Rham and Koszul are kept
/// on the Omega side. All grades are slice grades (see slice_basis.hpp).
enum class ComplexMap {
  Boundary1,    // Omega1 -> Omega0, shift sigma
  Boundary2,    // Omega2 -> Omega1, shift sigma
  Boundary3,    // Omega3 -> Omega2, shift sigma
  Coboundary0,  // X0 -> X1, shift sigma
  Coboundary1,  // X1 -> X2, shift sigma
  Coboundary2,  // X2 -> X3, shift sigma
  DeRham0,      // Omega0 -> Omega1, shift 0
  DeRham1,      // Omega1 -> Omega2, shift 0
  DeRham2,      // Omega2 -> Omega3, shift 0
  Koszul0,      // Omega0 -> Omega1, shift w(P)
  Koszul1,      // Omega1 -> Omega2, shift w(P)
  Koszul2,      // Omega2 -> Omega3, shift w(P)
};

const char* map_name(ComplexMap op);
SpaceKind map_source_kind(ComplexMap op);
SpaceKind map_target_kind(ComplexMap op);
// sigma = w(lambda) + w(P) - |w| for boundary/coboundary arrows, 0 for
// de Rham, w(P) for Koszul.
long map_shift(ComplexMap op, const GjpsStructure& s);
SliceValue apply_map(ComplexMap op, const SliceValue& value, const GjpsStructure& s);

/// One complex arrow restricted to one graded slice, as an exact matrix.
struct GradedOperatorMatrix {
  ComplexMap op = ComplexMap::Boundary1;
  long source_grade = 0;
  long target_grade = 0;
  ProductBasis source;
  ProductBasis target;
  QMatrix matrix{0, 0};

  std::string dump() const { return matrix.dump(source_grade, map_name(op)); }
};

// Throws InhomogeneousImageError if a column leaves the declared target
// slice (that would mean a wrong shift or grading convention).
GradedOperatorMatrix operator_matrix(ComplexMap op, long source_grade, const GjpsStructure& s);

}  // namespace gjps
