#pragma once

// Exact linear algebra over the scalar field: dense matrices, reduced row
// echelon form, kernel bases, linear solves, and dimensions of image
// intersections with coordinate subspaces.  All arithmetic is exact, so
// every rank and dimension reported here is a theorem about the matrix,
// not a numerical estimate.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsl2/scalar.hpp"

namespace qsl2 {

// Assigns dense indices to an ordered set of basis keys.  Keys are interned
// on first use, so supports discovered while assembling a matrix extend the
// row space automatically.
template <class Key>
struct Indexer {
  std::map<Key, long> index;
  std::vector<Key> keys;

  long intern(const Key& key) {
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    long pos = static_cast<long>(keys.size());
    index.emplace(key, pos);
    keys.push_back(key);
    return pos;
  }

  std::optional<long> find(const Key& key) const {
    auto it = index.find(key);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  long size() const { return static_cast<long>(keys.size()); }
};

struct Matrix {
  QContext ctx;
  long rows = 0;
  long cols = 0;
  std::vector<std::vector<Scalar>> entry;

  Matrix(const QContext& context, long r, long c)
      : ctx(context),
        rows(r),
        cols(c),
        entry(static_cast<size_t>(r),
              std::vector<Scalar>(static_cast<size_t>(c), context.zero())) {}

  Scalar& at(long r, long c) { return entry[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
  const Scalar& at(long r, long c) const {
    return entry[static_cast<size_t>(r)][static_cast<size_t>(c)];
  }
};

// Builds the matrix whose columns are the given sparse vectors, interning
// every key that occurs so the rows cover the full support of the columns.
template <class Key>
Matrix columns_matrix(const QContext& ctx, Indexer<Key>& basis,
                      const std::vector<std::map<Key, Scalar>>& columns) {
  for (const auto& col : columns)
    for (const auto& [key, coeff] : col) basis.intern(key);
  Matrix m(ctx, basis.size(), static_cast<long>(columns.size()));
  for (long c = 0; c < m.cols; c++)
    for (const auto& [key, coeff] : columns[static_cast<size_t>(c)])
      m.at(*basis.find(key), c) = coeff;
  return m;
}

inline std::vector<Scalar> mat_apply(const Matrix& m, const std::vector<Scalar>& x) {
  if (static_cast<long>(x.size()) != m.cols) throw std::logic_error("matrix/vector size mismatch");
  std::vector<Scalar> y(static_cast<size_t>(m.rows), m.ctx.zero());
  for (long r = 0; r < m.rows; r++)
    for (long c = 0; c < m.cols; c++)
      if (!m.at(r, c).is_zero() && !x[static_cast<size_t>(c)].is_zero())
        y[static_cast<size_t>(r)] = y[static_cast<size_t>(r)] + m.at(r, c) * x[static_cast<size_t>(c)];
  return y;
}

struct Echelon {
  Matrix reduced;
  std::vector<long> pivot_col;
  long rank = 0;
};

inline Echelon reduce(const Matrix& input) {
  Echelon e{input, {}, 0};
  Matrix& m = e.reduced;
  long row = 0;
  for (long col = 0; col < m.cols && row < m.rows; col++) {
    long pivot = -1;
    for (long r = row; r < m.rows; r++)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m.entry[static_cast<size_t>(pivot)], m.entry[static_cast<size_t>(row)]);
    Scalar inv = m.at(row, col).inv();
    for (long c = col; c < m.cols; c++) m.at(row, c) = m.at(row, c) * inv;
    for (long r = 0; r < m.rows; r++) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar factor = m.at(r, col);
      for (long c = col; c < m.cols; c++) m.at(r, c) = m.at(r, c) - factor * m.at(row, c);
    }
    e.pivot_col.push_back(col);
    row++;
  }
  e.rank = row;
  return e;
}

inline long rank(const Matrix& m) { return reduce(m).rank; }

// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  Echelon e = reduce(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (long c : e.pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Scalar>> basis;
  for (long free = 0; free < m.cols; free++) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(m.cols), m.ctx.zero());
    v[static_cast<size_t>(free)] = m.ctx.one();
    for (long p = 0; p < e.rank; p++)
      v[static_cast<size_t>(e.pivot_col[static_cast<size_t>(p)])] =
          m.ctx.zero() - e.reduced.at(p, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of m x = target with free variables set to zero, or nothing
// when the system is inconsistent.
inline std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& target) {
  if (static_cast<long>(target.size()) != m.rows) throw std::logic_error("solve: size mismatch");
  Matrix aug(m.ctx, m.rows, m.cols + 1);
  for (long r = 0; r < m.rows; r++) {
    for (long c = 0; c < m.cols; c++) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = target[static_cast<size_t>(r)];
  }
  Echelon e = reduce(aug);
  for (long p = 0; p < e.rank; p++)
    if (e.pivot_col[static_cast<size_t>(p)] == m.cols) return std::nullopt;
  std::vector<Scalar> x(static_cast<size_t>(m.cols), m.ctx.zero());
  for (long p = 0; p < e.rank; p++)
    x[static_cast<size_t>(e.pivot_col[static_cast<size_t>(p)])] = e.reduced.at(p, m.cols);
  return x;
}

// dim(im(m) ∩ span{e_r : r in window_rows}), from the subspace identity
// dim(U ∩ V) = dim U + dim V - dim(U + V) applied to U = im(m) and the
// coordinate subspace V spanned by the window rows.
inline long image_window_dim(const Matrix& m, const std::vector<long>& window_rows) {
  long w = static_cast<long>(window_rows.size());
  Matrix aug(m.ctx, m.rows, m.cols + w);
  for (long r = 0; r < m.rows; r++)
    for (long c = 0; c < m.cols; c++) aug.at(r, c) = m.at(r, c);
  for (long t = 0; t < w; t++) aug.at(window_rows[static_cast<size_t>(t)], m.cols + t) = m.ctx.one();
  return rank(m) + w - rank(aug);
}

// Sparse column as a map from row id to coefficient; absent rows are zero.
using SparseCol = std::map<long, Scalar>;

// Incremental sparse Gauss-Jordan over appended columns.  Every appended
// column is reduced against the stored pivots; an independent residual
// becomes a new pivot and the older pivots are back-reduced, so the pivot
// columns stay in reduced form.  The reducer records, for each pivot and
// for each dependent column, the combination of input columns that
// produced it.  One pass therefore yields the rank, a kernel basis in
// input coordinates, and membership certificates for later targets.
class ColumnReducer {
 public:
  explicit ColumnReducer(const QContext& context) : ctx(context) {}

  // Appends one column.  Returns true when the column enlarged the span.
  bool append(const SparseCol& col) {
    SparseCol residual = col;
    SparseCol combo;
    combo[appended_] = ctx.one();
    eliminate(residual, combo);
    appended_++;
    if (residual.empty()) {
      kernels_.push_back(std::move(combo));
      return false;
    }
    long row = residual.begin()->first;
    Scalar lead = residual.begin()->second;
    scale_col(residual, lead.inv());
    scale_col(combo, lead.inv());
    for (auto& p : pivots_) {
      auto hit = p.residual.find(row);
      if (hit == p.residual.end()) continue;
      Scalar f = hit->second;
      axpy(p.residual, -f, residual);
      axpy(p.combo, -f, combo);
    }
    by_row_[row] = pivots_.size();
    pivots_.push_back({row, std::move(residual), std::move(combo)});
    return true;
  }

  long rank() const { return static_cast<long>(pivots_.size()); }
  long appended() const { return appended_; }

  // Combinations x (input index -> coefficient) with sum x_j col_j = 0,
  // one for each dependent column seen so far.
  const std::vector<SparseCol>& kernels() const { return kernels_; }

  // When target lies in the span, returns x with sum x_j col_j = target.
  std::optional<SparseCol> express(const SparseCol& target) const {
    SparseCol residual = target;
    SparseCol combo;
    eliminate(residual, combo);
    if (!residual.empty()) return std::nullopt;
    scale_col(combo, -ctx.one());
    return combo;
  }

  bool contains(const SparseCol& target) const {
    SparseCol residual = target;
    SparseCol combo;
    eliminate(residual, combo);
    return residual.empty();
  }

 private:
  struct Pivot {
    long row;
    SparseCol residual;
    SparseCol combo;
  };

  void eliminate(SparseCol& residual, SparseCol& combo) const {
    bool again = true;
    while (again) {
      again = false;
      for (const auto& [row, coeff] : residual) {
        auto hit = by_row_.find(row);
        if (hit == by_row_.end()) continue;
        const Pivot& p = pivots_[hit->second];
        Scalar f = coeff;
        axpy(residual, -f, p.residual);
        axpy(combo, -f, p.combo);
        again = true;
        break;
      }
    }
  }

  static void axpy(SparseCol& acc, const Scalar& f, const SparseCol& src) {
    for (const auto& [row, coeff] : src) {
      auto it = acc.find(row);
      if (it == acc.end()) {
        acc.emplace(row, f * coeff);
      } else {
        it->second = it->second + f * coeff;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }

  static void scale_col(SparseCol& col, const Scalar& f) {
    for (auto& [row, coeff] : col) coeff = f * coeff;
  }

  QContext ctx;
  std::vector<Pivot> pivots_;
  std::map<long, size_t> by_row_;
  std::vector<SparseCol> kernels_;
  long appended_ = 0;
};

}  // namespace qsl2
