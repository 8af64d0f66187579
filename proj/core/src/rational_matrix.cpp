#include "gjps/rational_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gjps {

Rational SparseVec::at(long index) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), index,
                             [](const auto& e, long i) { return e.first < i; });
  if (it != entries.end() && it->first == index) return it->second;
  return Rational(0);
}

void SparseVec::set(long index, const Rational& value) {
  auto it = std::lower_bound(entries.begin(), entries.end(), index,
                             [](const auto& e, long i) { return e.first < i; });
  if (it != entries.end() && it->first == index) {
    if (value == 0) {
      entries.erase(it);
    } else {
      it->second = value;
    }
    return;
  }
  if (value != 0) entries.insert(it, {index, value});
}

SparseVec& SparseVec::axpy(const Rational& c, const SparseVec& other) {
  if (c == 0 || other.entries.empty()) return *this;
  std::vector<std::pair<long, Rational>> merged;
  merged.reserve(entries.size() + other.entries.size());
  auto a = entries.begin();
  auto b = other.entries.begin();
  while (a != entries.end() || b != other.entries.end()) {
    if (b == other.entries.end() || (a != entries.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == entries.end() || b->first < a->first) {
      merged.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational v = a->second + c * b->second;
      if (v != 0) merged.emplace_back(a->first, v);
      ++a;
      ++b;
    }
  }
  entries = std::move(merged);
  return *this;
}

SparseVec SparseVec::scaled(const Rational& c) const {
  SparseVec out;
  if (c == 0) return out;
  out.entries.reserve(entries.size());
  for (const auto& [i, v] : entries) out.entries.emplace_back(i, v * c);
  return out;
}

SparseVec SparseVec::normalized() const {
  if (entries.empty()) return *this;
  Integer den_lcm = 1;
  for (const auto& [i, v] : entries) {
    Integer d = v.get_den();
    den_lcm = lcm(den_lcm, d);
  }
  Integer num_gcd = 0;
  for (const auto& [i, v] : entries) {
    Integer scaled_num = v.get_num() * (den_lcm / v.get_den());
    num_gcd = gcd(num_gcd, scaled_num);
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (entries.front().second * factor < 0) factor = -factor;
  return scaled(factor);
}

QMatrix::QMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  columns_.resize(static_cast<size_t>(cols));
}

void QMatrix::set_column(long j, SparseVec v) {
  if (!v.entries.empty() && v.entries.back().first >= rows_) {
    throw std::out_of_range("column entry beyond row count");
  }
  columns_[static_cast<size_t>(j)] = std::move(v);
}

void QMatrix::set(long row, long col, const Rational& value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) throw std::out_of_range("matrix index");
  columns_[static_cast<size_t>(col)].set(row, value);
}

Rational QMatrix::at(long row, long col) const {
  return columns_[static_cast<size_t>(col)].at(row);
}

bool QMatrix::is_zero() const {
  for (const auto& c : columns_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

long QMatrix::nonzero_count() const {
  long n = 0;
  for (const auto& c : columns_) n += static_cast<long>(c.entries.size());
  return n;
}

SparseVec QMatrix::apply(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [j, v] : x.entries) {
    if (j >= cols_) throw std::out_of_range("vector index beyond column count");
    out.axpy(v, columns_[static_cast<size_t>(j)]);
  }
  return out;
}

QMatrix QMatrix::multiply(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix out(rows_, other.cols_);
  for (long j = 0; j < other.cols_; ++j) {
    out.set_column(j, apply(other.column(j)));
  }
  return out;
}

namespace {

// Integer sparse row used during fraction-free elimination.
struct IntRow {
  std::vector<std::pair<long, Integer>> entries;

  const Integer* find(long col) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), col,
                               [](const auto& e, long c) { return e.first < c; });
    if (it != entries.end() && it->first == col) return &it->second;
    return nullptr;
  }
};

// r <- (p * r - rc * pivot) / prev, every division exact (Bareiss).
IntRow bareiss_combine(const IntRow& r, const Integer& rc, const IntRow& pivot, const Integer& p,
                       const Integer& prev) {
  IntRow out;
  out.entries.reserve(r.entries.size() + pivot.entries.size());
  auto a = r.entries.begin();
  auto b = pivot.entries.begin();
  while (a != r.entries.end() || b != pivot.entries.end()) {
    long col;
    Integer v;
    if (b == pivot.entries.end() || (a != r.entries.end() && a->first < b->first)) {
      col = a->first;
      v = p * a->second;
      ++a;
    } else if (a == r.entries.end() || b->first < a->first) {
      col = b->first;
      v = -rc * b->second;
      ++b;
    } else {
      col = a->first;
      v = p * a->second - rc * b->second;
      ++a;
      ++b;
    }
    if (v != 0) {
      Integer q;
      mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      out.entries.emplace_back(col, q);
    }
  }
  return out;
}

size_t pivot_cost(const Integer& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

}  // namespace

QMatrix::RankKernel QMatrix::rank_kernel() const {
  // Build integer rows: multiply each row by the lcm of its denominators.
  std::vector<std::vector<std::pair<long, Rational>>> rat_rows(static_cast<size_t>(rows_));
  for (long j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : columns_[static_cast<size_t>(j)].entries) {
      rat_rows[static_cast<size_t>(i)].emplace_back(j, v);
    }
  }
  std::vector<IntRow> active;
  active.reserve(rat_rows.size());
  for (auto& rr : rat_rows) {
    if (rr.empty()) continue;
    Integer den_lcm = 1;
    for (const auto& [c, v] : rr) den_lcm = lcm(den_lcm, Integer(v.get_den()));
    IntRow row;
    row.entries.reserve(rr.size());
    for (const auto& [c, v] : rr) {
      row.entries.emplace_back(c, Integer(v.get_num() * (den_lcm / v.get_den())));
    }
    active.push_back(std::move(row));
  }

  std::vector<long> pivot_cols;
  std::vector<IntRow> pivot_rows;
  Integer prev = 1;
  for (long col = 0; col < cols_ && !active.empty(); ++col) {
    // Pivot: smallest entry magnitude, then sparsest row.
    size_t best = active.size();
    for (size_t k = 0; k < active.size(); ++k) {
      const Integer* v = active[k].find(col);
      if (!v) continue;
      if (best == active.size()) {
        best = k;
        continue;
      }
      const Integer* bv = active[best].find(col);
      auto cost = std::make_pair(pivot_cost(*v), active[k].entries.size());
      auto best_cost = std::make_pair(pivot_cost(*bv), active[best].entries.size());
      if (cost < best_cost) best = k;
    }
    if (best == active.size()) continue;  // free column

    IntRow pivot = std::move(active[best]);
    active.erase(active.begin() + static_cast<long>(best));
    Integer p = *pivot.find(col);
    std::vector<IntRow> next;
    next.reserve(active.size());
    for (auto& r : active) {
      const Integer* rc = r.find(col);
      IntRow nr = bareiss_combine(r, rc ? *rc : Integer(0), pivot, p, prev);
      if (!nr.entries.empty()) next.push_back(std::move(nr));
    }
    active = std::move(next);
    prev = p;
    pivot_cols.push_back(col);
    pivot_rows.push_back(std::move(pivot));
  }

  RankKernel result;
  result.rank = static_cast<long>(pivot_cols.size());

  // Kernel via back substitution: pivot row k has zero entries at every
  // earlier pivot column and every free column below its own pivot.
  std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
  for (long c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  for (long f = 0; f < cols_; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    SparseVec x;
    x.set(f, 1);
    for (long k = static_cast<long>(pivot_cols.size()) - 1; k >= 0; --k) {
      if (pivot_cols[static_cast<size_t>(k)] > f) continue;
      const IntRow& row = pivot_rows[static_cast<size_t>(k)];
      Rational acc(0);
      Rational pivot_val(0);
      for (const auto& [c, v] : row.entries) {
        if (c == pivot_cols[static_cast<size_t>(k)]) {
          pivot_val = Rational(v);
        } else {
          Rational xv = x.at(c);
          if (xv != 0) acc += Rational(v) * xv;
        }
      }
      x.set(pivot_cols[static_cast<size_t>(k)], -acc / pivot_val);
    }
    result.kernel.push_back(x.normalized());
  }
  return result;
}

long QMatrix::rank() const {
  return rank_kernel().rank;
}

std::string QMatrix::dump(long grade, const std::string& op) const {
  std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + " " +
                    std::to_string(grade) + " " + op + "\n";
  for (long j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : columns_[static_cast<size_t>(j)].entries) {
      out += std::to_string(i) + " " + std::to_string(j) + " " + v.get_num().get_str() + "/" +
             v.get_den().get_str() + "\n";
    }
  }
  return out;
}

SparseVec SpanChecker::reduce(SparseVec v) const {
  for (const auto& row : rows_) {
    if (v.is_zero()) break;
    long lead = row.entries.front().first;
    Rational c = v.at(lead);
    if (c != 0) v.axpy(-c, row);
  }
  return v;
}

bool SpanChecker::add(const SparseVec& v) {
  if (!v.entries.empty() && v.entries.back().first >= dimension_) {
    throw std::out_of_range("span vector beyond dimension");
  }
  SparseVec r = reduce(v);
  if (r.is_zero()) return false;
  r = r.scaled(Rational(1) / r.entries.front().second);
  auto it = std::lower_bound(rows_.begin(), rows_.end(), r.entries.front().first,
                             [](const SparseVec& a, long lead) { return a.entries.front().first < lead; });
  rows_.insert(it, std::move(r));
  return true;
}

bool SpanChecker::contains(const SparseVec& v) const {
  return reduce(v).is_zero();
}

}  // namespace gjps
