#include <doctest.h>

#include "gjps/homology.hpp"
#include "test_util.hpp"

using namespace gjps;

TEST_CASE("quadratic homology dimensions") {
  GjpsStructure s = gjps::testing::exgur();
  CHECK(homology_dims(0, 8, s).coefficients == std::vector<long>{1, 3, 3, 5, 5, 7, 7, 9, 9});
  CHECK(homology_dims(1, 8, s).coefficients == std::vector<long>{0, 3, 3, 7, 7, 11, 11, 15, 15});
  CHECK(homology_dims(2, 8, s).coefficients == std::vector<long>{0, 0, 0, 2, 2, 4, 4, 6, 6});
  CHECK(homology_dims(3, 8, s).coefficients == std::vector<long>(9, 0));
}

TEST_CASE("homology matches the sequence-derived series on all examples") {
  for (const GjpsStructure& s :
       {gjps::testing::exgur(), gjps::testing::expich(2), gjps::testing::nh()}) {
    auto dims = all_homology_dims(9, s);
    for (int i = 0; i < 4; ++i) {
      auto expansion = series_from_sequences(i, s).expand(9);
      for (long d = 0; d <= 9; ++d) {
        CHECK(Integer(dims[static_cast<size_t>(i)].at(d)) == expansion[static_cast<size_t>(d)]);
      }
    }
    CHECK(euler_consistency_check(dims, 9, s));
  }
}

TEST_CASE("cohomology of the quadratic example") {
  GjpsStructure s = gjps::testing::exgur();
  auto ph0 = cohomology_dims(0, 0, 10, s);
  for (long d = 0; d <= 10; ++d) CHECK(ph0.at(d) == (d % 2 == 0 ? 1 : 0));

  auto ph1 = cohomology_dims(1, -3, 10, s);
  for (long d = -3; d <= 10; ++d) CHECK(ph1.at(d) == (d >= 0 && d % 2 == 0 ? 2 : 0));

  auto ph3 = cohomology_dims(3, -3, 8, s);
  for (long d = -3; d <= 8; ++d) CHECK(ph3.at(d) == 1);  // K[P] (x) {1, z} one per grade
}

TEST_CASE("cohomology of the cubic example keeps only the modular branch") {
  GjpsStructure s = gjps::testing::expich(2);
  auto ph0 = cohomology_dims(0, 0, 10, s);
  for (long d = 0; d <= 10; ++d) CHECK(ph0.at(d) == (d % 3 == 0 ? 1 : 0));

  // K[P](grad lambda x grad P) sits at grades 3j + 1; no Euler branch since
  // w(P) = 3 != 2.
  auto ph1 = cohomology_dims(1, -3, 10, s);
  for (long d = -3; d <= 10; ++d) CHECK(ph1.at(d) == (d >= 1 && (d - 1) % 3 == 0 ? 1 : 0));
}

TEST_CASE("cohomology of the (3,3,2) example") {
  GjpsStructure s = gjps::testing::nh();
  auto ph0 = cohomology_dims(0, 0, 12, s);
  for (long d = 0; d <= 12; ++d) CHECK(ph0.at(d) == (d % 6 == 0 ? 1 : 0));

  auto ph1 = cohomology_dims(1, -8, 12, s);
  for (long d = -8; d <= 12; ++d) CHECK(ph1.at(d) == (d >= 0 && d % 6 == 0 ? 2 : 0));
}

TEST_CASE("rank tables are consistent") {
  GjpsStructure s = gjps::testing::nh();
  auto table = op_rank_table(ComplexMap::Boundary2, -6, 4, s);
  for (const auto& [g, info] : table) {
    CHECK(info.rank + info.kernel_dim == info.source_dim);
    CHECK(info.rank <= info.target_dim);
  }
}

TEST_CASE("homology requires the section-5 hypotheses") {
  GjpsStructure control = gjps::testing::jps_control();
  CHECK_FALSE(control.regular_sequence_ok());
  CHECK_THROWS_AS(homology_dims(0, 4, control), HypothesisError);
}
