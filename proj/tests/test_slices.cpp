#include <doctest.h>

#include "gjps/homology.hpp"
#include "gjps/slice_basis.hpp"
#include "test_util.hpp"

using namespace gjps;
using gjps::testing::parse3;

TEST_CASE("slice dimensions follow the isomorphism table") {
  WeightSystem w{1, 1, 1};
  CHECK(slice_basis(SpaceKind::X1, 0, w).dimension() == 9);  // three copies of A_1
  for (long d = 0; d <= 8; ++d) {
    CHECK(slice_basis(SpaceKind::Omega3, d, w).dimension() == slice_dimension(d, w));
    CHECK(slice_basis(SpaceKind::Omega0, d, w).dimension() == slice_dimension(d + 3, w));
    CHECK(slice_basis(SpaceKind::X0, d, w).dimension() ==
          slice_basis(SpaceKind::Omega3, d, w).dimension());
  }
  // Empty below the lowest populated grade.
  CHECK(slice_basis(SpaceKind::X3, -4, w).dimension() == 0);
  CHECK(slice_basis(SpaceKind::X3, -3, w).dimension() == 1);
}

TEST_CASE("slice dimensions match the generating functions up to grade 30") {
  for (const WeightSystem& w : {WeightSystem{1, 1, 1}, WeightSystem{3, 3, 2}}) {
    for (int k = 0; k < 4; ++k) {
      auto series = omega_form_series(k, w).expand(30 + w.total());
      SpaceKind kind = static_cast<SpaceKind>(k);  // Omega0..Omega3 in declaration order
      for (long form_grade = 0; form_grade <= 30; ++form_grade) {
        long dim = slice_basis(kind, form_to_slice_grade(form_grade, w), w).dimension();
        CHECK(Integer(dim) == series[static_cast<size_t>(form_grade)]);
      }
    }
  }
  WeightSystem pw{2, 3};
  for (long d = 0; d <= 30; ++d) {
    CHECK(slice_basis(SpaceKind::PlanarB, d, pw).dimension() == slice_dimension(d, pw));
    CHECK(slice_basis(SpaceKind::PlanarB2, d, pw).dimension() ==
          slice_dimension(d + 2, pw) + slice_dimension(d + 3, pw));
  }
}

TEST_CASE("flat indexing round trips") {
  WeightSystem w{3, 3, 2};
  ProductBasis basis = slice_basis(SpaceKind::X1, 4, w);
  for (long j = 0; j < basis.dimension(); ++j) {
    auto [component, monomial] = basis.element(j);
    auto idx = basis.index_of(component, monomial);
    REQUIRE(idx.has_value());
    CHECK(*idx == j);
  }
  CHECK_FALSE(basis.index_of(0, Monomial{9, 9, 9}).has_value());
}

TEST_CASE("decompose rejects values outside the slice") {
  WeightSystem w{1, 1, 1};
  ProductBasis basis = slice_basis(SpaceKind::X0, 2, w);
  CHECK_THROWS_AS(decompose(basis, SliceValue(parse3("x"))), InhomogeneousImageError);
  SparseVec ok = decompose(basis, SliceValue(parse3("x*y + 1/2*z^2")));
  CHECK(ok.entries.size() == 2);
}

TEST_CASE("operator matrices land in the declared target slices") {
  GjpsStructure s = gjps::testing::exgur();
  for (ComplexMap op :
       {ComplexMap::Boundary1, ComplexMap::Boundary2, ComplexMap::Boundary3, ComplexMap::Coboundary0,
        ComplexMap::Coboundary1, ComplexMap::Coboundary2, ComplexMap::DeRham0, ComplexMap::DeRham1,
        ComplexMap::DeRham2, ComplexMap::Koszul0, ComplexMap::Koszul1, ComplexMap::Koszul2}) {
    for (long g = -4; g <= 5; ++g) {
      CHECK_NOTHROW(operator_matrix(op, g, s));
    }
  }
  // Empty slice gives the 0 x 0 matrix with rank 0.
  auto empty = operator_matrix(ComplexMap::Boundary3, -7, s);
  CHECK(empty.matrix.cols() == 0);
  CHECK(empty.matrix.rank() == 0);
}

TEST_CASE("operator shifts") {
  GjpsStructure quadratic = gjps::testing::exgur();
  CHECK(map_shift(ComplexMap::Boundary1, quadratic) == 0);
  CHECK(map_shift(ComplexMap::Coboundary2, quadratic) == 0);
  CHECK(map_shift(ComplexMap::DeRham1, quadratic) == 0);
  CHECK(map_shift(ComplexMap::Koszul0, quadratic) == 2);

  GjpsStructure cubic = gjps::testing::expich(2);
  CHECK(map_shift(ComplexMap::Boundary2, cubic) == 1);
  CHECK(map_shift(ComplexMap::Koszul2, cubic) == 3);
}

TEST_CASE("matrix dump carries the operator name") {
  GjpsStructure s = gjps::testing::exgur();
  auto m = operator_matrix(ComplexMap::Coboundary0, 2, s);
  std::string dump = m.dump();
  // target X1 at grade 2 has three A_3 components (30 rows), source A_2 (6 columns)
  CHECK(dump.rfind("30 6 2 coboundary0\n", 0) == 0);
}
