#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "f4/field_ops.hpp"

namespace f4 {

/// Incremental Gauss-Jordan elimination over one of the field kernels.
///
/// Rows are fed one at a time.  The stored rows always form the reduced row
/// echelon form of everything inserted so far: each has a leading 1 in its
/// pivot column and zeros in every other pivot column.  Because the RREF of a
/// row space is unique, the final state does not depend on insertion order.
template <class Ops>
class RowReducer {
 public:
  using T = typename Ops::T;
  using SparseRow = std::vector<std::pair<int, T>>;

  RowReducer(Ops ops, int ncols)
      : ops_(std::move(ops)), ncols_(ncols), pivot_row_(ncols, -1), buf_(ncols, ops_.zero()), mark_(ncols, 0) {}

  const Ops& ops() const { return ops_; }
  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }

  /// Inserts a row given as (column, value) pairs; columns must be distinct.
  /// Returns true if the row was independent of the rows seen so far.
  bool insert(const SparseRow& row) {
    load(row);
    return finish_insert();
  }

  bool insert_dense(const std::vector<T>& row) {
    SparseRow sparse;
    for (int c = 0; c < ncols_; ++c) {
      if (!ops_.is_zero(row[c])) sparse.emplace_back(c, row[c]);
    }
    return insert(sparse);
  }

  /// Reduces a row modulo the current row space; the result is zero iff the
  /// row lies in the span.
  std::vector<T> reduce_dense(const std::vector<T>& row) {
    SparseRow sparse;
    for (int c = 0; c < ncols_; ++c) {
      if (!ops_.is_zero(row[c])) sparse.emplace_back(c, row[c]);
    }
    load(sparse);
    std::vector<T> out(ncols_, ops_.zero());
    for (int c : touched_) out[c] = buf_[c];
    clear();
    return out;
  }

  /// Pivot columns in increasing order.
  std::vector<int> pivot_columns() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c) {
      if (pivot_row_[c] >= 0) out.push_back(c);
    }
    return out;
  }

  std::vector<int> free_columns() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c) {
      if (pivot_row_[c] < 0) out.push_back(c);
    }
    return out;
  }

  /// The row whose leading 1 sits in `col` (which must be a pivot column).
  const SparseRow& pivot_row(int col) const { return rows_[pivot_row_[col]]; }

  /// RREF rows ordered by pivot column.
  std::vector<SparseRow> rref() const {
    std::vector<SparseRow> out;
    for (int c = 0; c < ncols_; ++c) {
      if (pivot_row_[c] >= 0) out.push_back(rows_[pivot_row_[c]]);
    }
    return out;
  }

  /// One kernel vector per free column (ascending): 1 at that column, 0 at
  /// the other free columns, and the forced values at the pivot columns.
  std::vector<std::vector<T>> nullspace() const {
    std::vector<std::vector<T>> out;
    for (int f = 0; f < ncols_; ++f) {
      if (pivot_row_[f] >= 0) continue;
      std::vector<T> v(ncols_, ops_.zero());
      v[f] = ops_.one();
      for (const auto& row : rows_) {
        auto it = std::lower_bound(row.begin(), row.end(), f, [](const auto& e, int c) { return e.first < c; });
        if (it != row.end() && it->first == f) v[row.front().first] = ops_.neg(it->second);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  void touch(int c) {
    if (!mark_[c]) {
      mark_[c] = 1;
      touched_.push_back(c);
    }
  }

  void clear() {
    for (int c : touched_) {
      buf_[c] = ops_.zero();
      mark_[c] = 0;
    }
    touched_.clear();
  }

  // Leaves row minus its projection onto the pivot rows in buf_.  Pivot rows
  // vanish on each other's pivot columns, so the factor for each pivot column
  // is just the incoming entry there.
  void load(const SparseRow& row) {
    for (const auto& [c, v] : row) {
      buf_[c] = v;
      touch(c);
    }
    for (const auto& [c, v] : row) {
      int r = pivot_row_[c];
      if (r < 0 || ops_.is_zero(v)) continue;
      T f = v;
      for (const auto& [j, x] : rows_[r]) {
        ops_.sub_mul(buf_[j], f, x);
        touch(j);
      }
    }
  }

  bool finish_insert() {
    int lead = -1;
    for (int c : touched_) {
      if (pivot_row_[c] < 0 && !ops_.is_zero(buf_[c]) && (lead < 0 || c < lead)) lead = c;
    }
    if (lead < 0) {
      clear();
      return false;
    }
    T scale = ops_.inv(buf_[lead]);
    SparseRow fresh;
    std::sort(touched_.begin(), touched_.end());
    for (int c : touched_) {
      if (pivot_row_[c] < 0 && !ops_.is_zero(buf_[c])) fresh.emplace_back(c, ops_.mul(scale, buf_[c]));
    }
    clear();
    fresh.front().second = ops_.one();

    for (auto& row : rows_) {
      auto it = std::lower_bound(row.begin(), row.end(), lead, [](const auto& e, int c) { return e.first < c; });
      if (it == row.end() || it->first != lead) continue;
      T f = it->second;
      row = axpy(row, f, fresh);
    }
    pivot_row_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(fresh));
    return true;
  }

  // row - f * other, merged by column.
  SparseRow axpy(const SparseRow& row, const T& f, const SparseRow& other) const {
    SparseRow out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < other.size()) {
      if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || other[j].first < row[i].first) {
        out.emplace_back(other[j].first, ops_.neg(ops_.mul(f, other[j].second)));
        ++j;
      } else {
        T v = row[i].second;
        ops_.sub_mul(v, f, other[j].second);
        if (!ops_.is_zero(v)) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Ops ops_;
  int ncols_;
  std::vector<int> pivot_row_;
  std::vector<SparseRow> rows_;
  std::vector<T> buf_;
  std::vector<char> mark_;
  std::vector<int> touched_;
};

/// Writes vectors as combinations of a fixed generating list.
///
/// Row i of the internal matrix is (g_i | e_i).  Reducing (v | 0) against its
/// RREF leaves (v - sum q_i g_i | -q), whose left part vanishes exactly when
/// v lies in the span.
template <class Ops>
class SpanSolver {
 public:
  using T = typename Ops::T;

  SpanSolver(const Ops& ops, const std::vector<std::vector<T>>& gens, int ncols)
      : ops_(ops), n_(ncols), m_(static_cast<int>(gens.size())), red_(ops, ncols + m_) {
    for (int i = 0; i < m_; ++i) {
      std::vector<T> row(gens[i]);
      row.resize(n_ + m_, ops_.zero());
      row[n_ + i] = ops_.one();
      red_.insert_dense(row);
    }
    for (int c = 0; c < n_; ++c) rank_ += red_.is_pivot(c) ? 1 : 0;
  }

  /// Rank of the generators.
  int rank() const { return rank_; }

  /// Coefficients q with v = sum q_i g_i, or nullopt if v is outside the span.
  /// Unique when the generators are independent.
  std::optional<std::vector<T>> coefficients(const std::vector<T>& v) {
    std::vector<T> row(v);
    row.resize(n_ + m_, ops_.zero());
    auto red = red_.reduce_dense(row);
    for (int c = 0; c < n_; ++c) {
      if (!ops_.is_zero(red[c])) return std::nullopt;
    }
    std::vector<T> q(m_);
    for (int i = 0; i < m_; ++i) q[i] = ops_.neg(red[n_ + i]);
    return q;
  }

 private:
  Ops ops_;
  int n_, m_;
  RowReducer<Ops> red_;
  int rank_ = 0;
};

/// Rank of a dense matrix given as rows.
template <class Ops>
int matrix_rank(const Ops& ops, const std::vector<std::vector<typename Ops::T>>& rows, int ncols) {
  RowReducer<Ops> r(ops, ncols);
  for (const auto& row : rows) r.insert_dense(row);
  return r.rank();
}

}  // namespace f4
