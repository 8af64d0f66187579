#pragma once

#include <string>
#include <vector>

#include "gjps/rational.hpp"

namespace gjps {

/// Sparse vector with exact rational entries, sorted by index.
struct SparseVec {
  std::vector<std::pair<long, Rational>> entries;

  bool is_zero() const { return entries.empty(); }
  Rational at(long index) const;
  void set(long index, const Rational& value);
  SparseVec& axpy(const Rational& c, const SparseVec& other);  // *this += c * other
  SparseVec scaled(const Rational& c) const;
  // Scales so entries are coprime integers with positive leading entry.
  SparseVec normalized() const;
  bool operator==(const SparseVec&) const = default;
};

/// Sparse exact rational matrix, stored column-major.
///
/// Rank and kernel go through fraction-free (Bareiss) elimination: rows are
/// cleared to integers, one exact division by the previous pivot per step,
/// pivots chosen by smallest-magnitude entry then sparsest row. Back
/// substitution over the rationals recovers a kernel basis.
class QMatrix {
 public:
  QMatrix(long rows, long cols);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const SparseVec& column(long j) const { return columns_[static_cast<size_t>(j)]; }
  void set_column(long j, SparseVec v);
  void set(long row, long col, const Rational& value);
  Rational at(long row, long col) const;
  bool is_zero() const;
  long nonzero_count() const;

  SparseVec apply(const SparseVec& x) const;  // A * x
  QMatrix multiply(const QMatrix& other) const;

  struct RankKernel {
    long rank = 0;
    std::vector<SparseVec> kernel;  // vectors of length cols(), normalized
  };
  RankKernel rank_kernel() const;
  long rank() const;

  // Debug dump: header "rows cols grade op", then one "row col num/den" line
  // per nonzero entry in column-major order.
  std::string dump(long grade, const std::string& op) const;

 private:
  long rows_, cols_;
  std::vector<SparseVec> columns_;
};

/// Incremental echelon basis over Q for span membership tests.
class SpanChecker {
 public:
  explicit SpanChecker(long dimension) : dimension_(dimension) {}

  // Returns true when the vector enlarged the span.
  bool add(const SparseVec& v);
  bool contains(const SparseVec& v) const;
  long dim() const { return static_cast<long>(rows_.size()); }
  long dimension() const { return dimension_; }

 private:
  SparseVec reduce(SparseVec v) const;
  long dimension_;
  // Rows with unit leading coefficient, ordered by leading index.
  std::vector<SparseVec> rows_;
};

}  // namespace gjps
