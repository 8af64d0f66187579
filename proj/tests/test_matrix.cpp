#include <doctest.h>

#include <vector>

#include "gjps/rational_matrix.hpp"
#include "test_util.hpp"

using namespace gjps;

namespace {

// Independent oracle: plain rational Gaussian elimination, dense.
long naive_rank(const QMatrix& m) {
  std::vector<std::vector<Rational>> a(static_cast<size_t>(m.rows()),
                                       std::vector<Rational>(static_cast<size_t>(m.cols()), Rational(0)));
  for (long j = 0; j < m.cols(); ++j) {
    for (const auto& [i, v] : m.column(j).entries) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
  }
  long rank = 0;
  long row = 0;
  for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
    long pivot = -1;
    for (long r = row; r < m.rows(); ++r) {
      if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(row)]);
    for (long r = 0; r < m.rows(); ++r) {
      if (r == row || a[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
      Rational factor = a[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                        a[static_cast<size_t>(row)][static_cast<size_t>(col)];
      for (long c = 0; c < m.cols(); ++c) {
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            factor * a[static_cast<size_t>(row)][static_cast<size_t>(c)];
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

QMatrix random_matrix(gjps::testing::Rng& rng, long rows, long cols, int fill_percent) {
  QMatrix m(rows, cols);
  for (long j = 0; j < cols; ++j) {
    for (long i = 0; i < rows; ++i) {
      if (rng.uniform(0, 99) < fill_percent) m.set(i, j, rng.coefficient());
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rank and kernel of small explicit matrices") {
  QMatrix id(3, 3);
  for (long i = 0; i < 3; ++i) id.set(i, i, 1);
  auto rk = id.rank_kernel();
  CHECK(rk.rank == 3);
  CHECK(rk.kernel.empty());

  // Row space {(1,2,3)} twice: rank 1, kernel dim 2.
  QMatrix m(2, 3);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(0, 2, 3);
  m.set(1, 0, 2);
  m.set(1, 1, 4);
  m.set(1, 2, 6);
  rk = m.rank_kernel();
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel.size() == 2);
  for (const auto& v : rk.kernel) CHECK(m.apply(v).is_zero());

  QMatrix empty(0, 0);
  CHECK(empty.rank() == 0);
  QMatrix no_rows(0, 2);
  rk = no_rows.rank_kernel();
  CHECK(rk.rank == 0);
  CHECK(rk.kernel.size() == 2);
}

TEST_CASE("fraction-free rank equals the naive rational oracle") {
  gjps::testing::Rng rng(41);
  for (int round = 0; round < 60; ++round) {
    long rows = rng.uniform(1, 10), cols = rng.uniform(1, 10);
    QMatrix m = random_matrix(rng, rows, cols, rng.uniform(15, 80));
    auto rk = m.rank_kernel();
    CHECK(rk.rank == naive_rank(m));
    CHECK(rk.rank + static_cast<long>(rk.kernel.size()) == cols);
    for (const auto& v : rk.kernel) CHECK(m.apply(v).is_zero());
  }
}

TEST_CASE("kernel vectors are primitive-integer normalized") {
  QMatrix m(1, 2);
  m.set(0, 0, make_rational(1, 2));
  m.set(0, 1, make_rational(1, 3));
  auto rk = m.rank_kernel();
  REQUIRE(rk.kernel.size() == 1);
  // kernel of (1/2, 1/3): multiples of (2, -3); normalized leading entry > 0.
  CHECK(rk.kernel[0].at(0) == 2);
  CHECK(rk.kernel[0].at(1) == -3);
}

TEST_CASE("span checker") {
  SpanChecker span(3);
  SparseVec a, b, c;
  a.set(0, 1);
  a.set(1, 2);
  b.set(1, 1);
  c.set(0, 1);
  c.set(1, 1);
  CHECK(span.add(a));
  CHECK(span.add(b));
  CHECK_FALSE(span.add(c));  // a - b
  CHECK(span.dim() == 2);
  CHECK(span.contains(c));
  SparseVec d;
  d.set(2, make_rational(5, 7));
  CHECK_FALSE(span.contains(d));
}

TEST_CASE("matrix product and dump format") {
  QMatrix a(2, 2), b(2, 2);
  a.set(0, 0, 1);
  a.set(0, 1, 2);
  a.set(1, 1, 3);
  b.set(0, 0, 1);
  b.set(1, 0, 1);
  QMatrix c = a.multiply(b);
  CHECK(c.at(0, 0) == 3);
  CHECK(c.at(1, 0) == 3);
  CHECK(c.at(0, 1) == 0);

  QMatrix d(2, 2);
  d.set(0, 0, make_rational(1, 2));
  d.set(1, 1, -2);
  CHECK(d.dump(5, "boundary1") == "2 2 5 boundary1\n0 0 1/2\n1 1 -2/1\n");
}
