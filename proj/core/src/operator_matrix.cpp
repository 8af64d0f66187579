#include "gjps/operator_matrix.hpp"

namespace gjps {

const char* map_name(ComplexMap op) {
  switch (op) {
    case ComplexMap::Boundary1: return "boundary1";
    case ComplexMap::Boundary2: return "boundary2";
    case ComplexMap::Boundary3: return "boundary3";
    case ComplexMap::Coboundary0: return "coboundary0";
    case ComplexMap::Coboundary1: return "coboundary1";
    case ComplexMap::Coboundary2: return "coboundary2";
    case ComplexMap::DeRham0: return "derham0";
    case ComplexMap::DeRham1: return "derham1";
    case ComplexMap::DeRham2: return "derham2";
    case ComplexMap::Koszul0: return "koszul0";
    case ComplexMap::Koszul1: return "koszul1";
    case ComplexMap::Koszul2: return "koszul2";
  }
  return "?";
}

SpaceKind map_source_kind(ComplexMap op) {
  switch (op) {
    case ComplexMap::Boundary1: return SpaceKind::Omega1;
    case ComplexMap::Boundary2: return SpaceKind::Omega2;
    case ComplexMap::Boundary3: return SpaceKind::Omega3;
    case ComplexMap::Coboundary0: return SpaceKind::X0;
    case ComplexMap::Coboundary1: return SpaceKind::X1;
    case ComplexMap::Coboundary2: return SpaceKind::X2;
    case ComplexMap::DeRham0: return SpaceKind::Omega0;
    case ComplexMap::DeRham1: return SpaceKind::Omega1;
    case ComplexMap::DeRham2: return SpaceKind::Omega2;
    case ComplexMap::Koszul0: return SpaceKind::Omega0;
    case ComplexMap::Koszul1: return SpaceKind::Omega1;
    case ComplexMap::Koszul2: return SpaceKind::Omega2;
  }
  throw std::logic_error("unreachable");
}

SpaceKind map_target_kind(ComplexMap op) {
  switch (op) {
    case ComplexMap::Boundary1: return SpaceKind::Omega0;
    case ComplexMap::Boundary2: return SpaceKind::Omega1;
    case ComplexMap::Boundary3: return SpaceKind::Omega2;
    case ComplexMap::Coboundary0: return SpaceKind::X1;
    case ComplexMap::Coboundary1: return SpaceKind::X2;
    case ComplexMap::Coboundary2: return SpaceKind::X3;
    case ComplexMap::DeRham0: return SpaceKind::Omega1;
    case ComplexMap::DeRham1: return SpaceKind::Omega2;
    case ComplexMap::DeRham2: return SpaceKind::Omega3;
    case ComplexMap::Koszul0: return SpaceKind::Omega1;
    case ComplexMap::Koszul1: return SpaceKind::Omega2;
    case ComplexMap::Koszul2: return SpaceKind::Omega3;
  }
  throw std::logic_error("unreachable");
}

long map_shift(ComplexMap op, const GjpsStructure& s) {
  switch (op) {
    case ComplexMap::Boundary1:
    case ComplexMap::Boundary2:
    case ComplexMap::Boundary3:
    case ComplexMap::Coboundary0:
    case ComplexMap::Coboundary1:
    case ComplexMap::Coboundary2:
      return s.shift();
    case ComplexMap::DeRham0:
    case ComplexMap::DeRham1:
    case ComplexMap::DeRham2:
      return 0;
    case ComplexMap::Koszul0:
    case ComplexMap::Koszul1:
    case ComplexMap::Koszul2:
      return s.casimir_degree();
  }
  throw std::logic_error("unreachable");
}

SliceValue apply_map(ComplexMap op, const SliceValue& value, const GjpsStructure& s) {
  switch (op) {
    case ComplexMap::Boundary1: return boundary1(std::get<VectorField>(value), s);
    case ComplexMap::Boundary2: return boundary2(std::get<VectorField>(value), s);
    case ComplexMap::Boundary3: return boundary3(std::get<Polynomial>(value), s);
    case ComplexMap::Coboundary0: return coboundary0(std::get<Polynomial>(value), s);
    case ComplexMap::Coboundary1: return coboundary1(std::get<VectorField>(value), s);
    case ComplexMap::Coboundary2: return coboundary2(std::get<VectorField>(value), s);
    case ComplexMap::DeRham0: return grad(std::get<Polynomial>(value));
    case ComplexMap::DeRham1: return curl(std::get<VectorField>(value));
    case ComplexMap::DeRham2: return divergence(std::get<VectorField>(value));
    case ComplexMap::Koszul0: return koszul0(std::get<Polynomial>(value), s.casimir());
    case ComplexMap::Koszul1: return koszul1(std::get<VectorField>(value), s.casimir());
    case ComplexMap::Koszul2: return koszul2(std::get<VectorField>(value), s.casimir());
  }
  throw std::logic_error("unreachable");
}

GradedOperatorMatrix operator_matrix(ComplexMap op, long source_grade, const GjpsStructure& s) {
  GradedOperatorMatrix out;
  out.op = op;
  out.source_grade = source_grade;
  out.target_grade = source_grade + map_shift(op, s);
  out.source = slice_basis(map_source_kind(op), out.source_grade, s.weights());
  out.target = slice_basis(map_target_kind(op), out.target_grade, s.weights());
  out.matrix = matrix_of_map(out.source, out.target,
                             [&](const SliceValue& v) { return apply_map(op, v, s); });
  return out;
}

}  // namespace gjps
