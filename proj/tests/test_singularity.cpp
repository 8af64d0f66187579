#include <doctest.h>

#include "gjps/rational_matrix.hpp"
#include "gjps/singularity.hpp"
#include "test_util.hpp"

using namespace gjps;
using gjps::testing::parse2;
using gjps::testing::parse3;

TEST_CASE("jacobian quotient dims") {
  WeightSystem w111{1, 1, 1};
  auto dims = jacobian_quotient_dims(parse3("x*y + 1/2*z^2"), w111, 6);
  CHECK(dims[0] == 1);
  for (size_t d = 1; d < dims.size(); ++d) CHECK(dims[d] == 0);

  WeightSystem w332{3, 3, 2};
  dims = jacobian_quotient_dims(parse3("x^2 + y^2 + z^3"), w332, 8);
  for (size_t d = 0; d < dims.size(); ++d) CHECK(dims[d] == (d == 0 || d == 2 ? 1 : 0));

  dims = jacobian_quotient_dims(parse3("1/3*(x^3 + y^3 + z^3)"), w111, 6);
  CHECK(dims == std::vector<long>{1, 3, 3, 1, 0, 0, 0});
}

TEST_CASE("Milnor numbers") {
  WeightSystem w111{1, 1, 1};
  CHECK(*milnor_number(parse3("x*y + 1/2*z^2"), w111) == 1);
  // Fermat family (x^{n+1} + y^{n+1} + z^{n+1})/(n+1): mu = n^3.
  for (int n = 1; n <= 3; ++n) {
    std::string nn = std::to_string(n + 1);
    Polynomial p = parse3("1/" + nn + "*(x^" + nn + " + y^" + nn + " + z^" + nn + ")");
    CHECK(*milnor_number(p, w111) == n * n * n);
  }
  CHECK(*milnor_number(parse3("x^2 + y^2 + z^3"), WeightSystem{3, 3, 2}) == 2);

  // Degenerate: two vanishing partials; the quotient never becomes finite.
  CHECK_FALSE(milnor_number(parse3("x^2"), w111).has_value());
  CHECK_FALSE(milnor_number(parse3("x*y"), w111).has_value());
}

TEST_CASE("singularity bases are reduced deterministic monomials") {
  CHECK(sing_basis(parse3("x^2 + y^2 + z^3"), WeightSystem{3, 3, 2}) ==
        std::vector<Monomial>{Monomial{0, 0, 0}, Monomial{0, 0, 1}});
  CHECK(sing_basis(parse3("x*y + 1/2*z^2"), WeightSystem{1, 1, 1}) ==
        std::vector<Monomial>{Monomial{0, 0, 0}});
  CHECK(sing_basis(parse2("x^2 + y^2"), WeightSystem{1, 1}) ==
        std::vector<Monomial>{Monomial{0, 0}});

  auto planar = sing_basis(parse2("1/3*(x^3 + y^3)"), WeightSystem{1, 1});
  CHECK(planar == std::vector<Monomial>{Monomial{0, 0}, Monomial{0, 1}, Monomial{1, 0}, Monomial{1, 1}});
  CHECK(*milnor_number(parse2("1/3*(x^3 + y^3)"), WeightSystem{1, 1}) == 4);
}

TEST_CASE("quotient dims survive a different elimination route") {
  // Same slice ranks out of the incremental span and the Bareiss matrix, with
  // the generator stream reversed.
  WeightSystem w{1, 1, 1};
  Polynomial p = parse3("1/3*(x^3 + y^3 + z^3)");
  std::vector<Polynomial> gens{p.derivative(0), p.derivative(1), p.derivative(2)};
  std::vector<Polynomial> reversed{p.derivative(2), p.derivative(1), p.derivative(0)};
  CHECK(graded_quotient_dims(gens, w, 8) == graded_quotient_dims(reversed, w, 8));

  for (long d = 0; d <= 6; ++d) {
    GradedSliceBasis ambient = monomial_basis(d, w);
    QMatrix m(ambient.dimension(), 0);
    std::vector<SparseVec> columns;
    for (const auto& g : gens) {
      for (const auto& mono : monomial_basis(d - 2, w).monomials) {
        Polynomial prod = g * Polynomial::monomial(mono, 1);
        SparseVec v;
        long idx = 0;
        for (const auto& am : ambient.monomials) {
          Rational c = prod.coefficient(am);
          if (c != 0) v.set(idx, c);
          ++idx;
        }
        columns.push_back(v);
      }
    }
    QMatrix ideal(ambient.dimension(), static_cast<long>(columns.size()));
    for (size_t j = 0; j < columns.size(); ++j) ideal.set_column(static_cast<long>(j), columns[j]);
    long quotient = ambient.dimension() - ideal.rank();
    CHECK(quotient == graded_quotient_dims(gens, w, d)[static_cast<size_t>(d)]);
  }
}

TEST_CASE("quotient dims vanish at the socle cutoff for isolated singularities") {
  for (const auto& [text, weights] :
       std::vector<std::pair<std::string, WeightSystem>>{{"x*y + 1/2*z^2", WeightSystem{1, 1, 1}},
                                                         {"x^2 + y^2 + z^3", WeightSystem{3, 3, 2}},
                                                         {"1/4*(x^4 + y^4 + z^4)", WeightSystem{1, 1, 1}}}) {
    SingularityRing ring = analyze_singularity(parse3(text), weights);
    REQUIRE(ring.milnor.has_value());
    for (long d = ring.cutoff; d < static_cast<long>(ring.quotient_dims.size()); ++d) {
      CHECK(ring.quotient_dims[static_cast<size_t>(d)] == 0);
    }
  }
}

TEST_CASE("regular sequence verification") {
  WeightSystem w111{1, 1, 1};
  CHECK(regular_sequence_check(parse3("z"), parse3("x*y + 1/2*z^2"), w111, 12));
  CHECK_FALSE(regular_sequence_check(parse3("z"), parse3("z^2"), w111, 12));
  CHECK(regular_sequence_check(parse3("z"), parse3("x^2 + y^2 + z^3"), WeightSystem{3, 3, 2}, 12));
  // (1, P) generates the unit ideal.
  CHECK_FALSE(regular_sequence_check(parse3("1"), parse3("x*y + 1/2*z^2"), w111, 12));
}

TEST_CASE("section-6 basis additivity") {
  for (const GjpsStructure& s :
       {gjps::testing::exgur(), gjps::testing::expich(2), gjps::testing::nh()}) {
    const Section6Data* s6 = s.section6();
    REQUIRE(s6 != nullptr);
    long mu = *s.casimir_singularity().milnor;
    long mu_planar = *s6->planar_singularity.milnor;
    CHECK(mu == (s6->r + 1) * mu_planar);

    // mu_s = {z^i theta_k : 0 <= i <= r} as monomial sets.
    std::vector<Monomial> expected;
    for (int i = 0; i <= s6->r; ++i) {
      for (const auto& th : s6->planar_singularity.basis) {
        expected.push_back(Monomial{th.exponent(0), th.exponent(1), i});
      }
    }
    std::vector<Monomial> actual = s.casimir_singularity().basis;
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    CHECK(actual == expected);
  }
}
