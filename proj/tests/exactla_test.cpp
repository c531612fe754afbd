#include "qsl2/exactla.hpp"

#include <gtest/gtest.h>

#include "util.hpp"

namespace qsl2 {
namespace {

using testutil::generic_ctx;
using testutil::q2_ctx;
using testutil::rand_coeff;
using testutil::rint;

Matrix rand_matrix(const QContext& ctx, std::mt19937_64& rng, long rows, long cols) {
  Matrix m(ctx, rows, cols);
  for (long r = 0; r < rows; r++)
    for (long c = 0; c < cols; c++)
      if (rint(rng, 0, 2) != 0) m.at(r, c) = rand_coeff(ctx, rng);
  return m;
}

// Independent count of dim(im(m) ∩ span(window)): vectors x with m x
// supported inside the window are exactly the kernel of the complementary
// rows, and x -> m x collapses ker(m) fibers, so the dimension is the
// difference of the two kernel dimensions.
long image_window_dim_oracle(const Matrix& m, const std::vector<long>& window_rows) {
  std::vector<bool> in_window(static_cast<size_t>(m.rows), false);
  for (long r : window_rows) in_window[static_cast<size_t>(r)] = true;
  Matrix outside(m.ctx, 0, m.cols);
  for (long r = 0; r < m.rows; r++) {
    if (in_window[static_cast<size_t>(r)]) continue;
    outside.entry.push_back(m.entry[static_cast<size_t>(r)]);
    outside.rows++;
  }
  long nullity_outside = static_cast<long>(kernel_basis(outside).size());
  long nullity_full = static_cast<long>(kernel_basis(m).size());
  return nullity_outside - nullity_full;
}

TEST(ExactLinearAlgebra, RankOfSmallMatrices) {
  QContext ctx = generic_ctx();
  Matrix singular(ctx, 2, 2);
  singular.at(0, 0) = ctx.one();
  singular.at(0, 1) = ctx.qpow(1);
  singular.at(1, 0) = ctx.qpow(1);
  singular.at(1, 1) = ctx.qpow(2);
  EXPECT_EQ(rank(singular), 1);

  Matrix regular(ctx, 2, 2);
  regular.at(0, 0) = ctx.one();
  regular.at(0, 1) = ctx.qpow(1);
  regular.at(1, 1) = ctx.one();
  EXPECT_EQ(rank(regular), 2);

  Matrix zero(ctx, 3, 2);
  EXPECT_EQ(rank(zero), 0);
  EXPECT_EQ(static_cast<long>(kernel_basis(zero).size()), 2);
}

TEST(ExactLinearAlgebra, KernelVectorsAnnihilate) {
  std::mt19937_64 rng(11);
  for (const QContext& ctx : {generic_ctx(), q2_ctx()}) {
    for (int trial = 0; trial < 25; trial++) {
      Matrix m = rand_matrix(ctx, rng, rint(rng, 1, 5), rint(rng, 1, 5));
      auto basis = kernel_basis(m);
      EXPECT_EQ(rank(m) + static_cast<long>(basis.size()), m.cols);
      for (const auto& v : basis) {
        bool nonzero = false;
        for (const Scalar& s : v) nonzero = nonzero || !s.is_zero();
        EXPECT_TRUE(nonzero);
        for (const Scalar& s : mat_apply(m, v)) EXPECT_TRUE(s.is_zero());
      }
    }
  }
}

TEST(ExactLinearAlgebra, SolveFindsAWitness) {
  std::mt19937_64 rng(12);
  QContext ctx = generic_ctx();
  for (int trial = 0; trial < 25; trial++) {
    Matrix m = rand_matrix(ctx, rng, rint(rng, 1, 5), rint(rng, 1, 5));
    std::vector<Scalar> x(static_cast<size_t>(m.cols), ctx.zero());
    for (auto& s : x)
      if (rint(rng, 0, 1) == 0) s = rand_coeff(ctx, rng);
    std::vector<Scalar> target = mat_apply(m, x);
    auto witness = solve(m, target);
    ASSERT_TRUE(witness.has_value());
    std::vector<Scalar> check = mat_apply(m, *witness);
    for (long r = 0; r < m.rows; r++)
      EXPECT_TRUE((check[static_cast<size_t>(r)] - target[static_cast<size_t>(r)]).is_zero());
  }
}

TEST(ExactLinearAlgebra, SolveDetectsInconsistency) {
  QContext ctx = generic_ctx();
  Matrix m(ctx, 2, 1);
  m.at(0, 0) = ctx.one();
  m.at(1, 0) = ctx.qpow(1);
  std::vector<Scalar> target = {ctx.zero(), ctx.one()};
  EXPECT_FALSE(solve(m, target).has_value());
  target = {ctx.one(), ctx.qpow(1)};
  EXPECT_TRUE(solve(m, target).has_value());
}

TEST(ExactLinearAlgebra, WindowedImageDimensionMatchesOracle) {
  std::mt19937_64 rng(13);
  for (const QContext& ctx : {generic_ctx(), q2_ctx()}) {
    for (int trial = 0; trial < 25; trial++) {
      Matrix m = rand_matrix(ctx, rng, rint(rng, 1, 6), rint(rng, 1, 5));
      std::vector<long> window;
      for (long r = 0; r < m.rows; r++)
        if (rint(rng, 0, 1) == 0) window.push_back(r);
      EXPECT_EQ(image_window_dim(m, window), image_window_dim_oracle(m, window));
    }
  }
}

TEST(ExactLinearAlgebra, IndexerAssignsStablePositions) {
  Indexer<std::pair<long, long>> basis;
  EXPECT_EQ(basis.intern({2, 1}), 0);
  EXPECT_EQ(basis.intern({0, 5}), 1);
  EXPECT_EQ(basis.intern({2, 1}), 0);
  EXPECT_EQ(basis.size(), 2);
  EXPECT_FALSE(basis.find({9, 9}).has_value());
  ASSERT_TRUE(basis.find({0, 5}).has_value());
  EXPECT_EQ(*basis.find({0, 5}), 1);
}

TEST(ExactLinearAlgebra, ColumnReducerMatchesDenseRank) {
  std::mt19937_64 rng(14);
  for (const QContext& ctx : {generic_ctx(), q2_ctx()}) {
    for (int trial = 0; trial < 25; trial++) {
      Matrix m = rand_matrix(ctx, rng, rint(rng, 1, 6), rint(rng, 1, 6));
      ColumnReducer red(ctx);
      for (long c = 0; c < m.cols; c++) {
        SparseCol col;
        for (long r = 0; r < m.rows; r++)
          if (!m.at(r, c).is_zero()) col[r] = m.at(r, c);
        red.append(col);
      }
      EXPECT_EQ(red.rank(), rank(m));
      EXPECT_EQ(red.appended(), m.cols);
      EXPECT_EQ(red.rank() + static_cast<long>(red.kernels().size()), m.cols);
      for (const SparseCol& k : red.kernels()) {
        std::vector<Scalar> x(static_cast<size_t>(m.cols), ctx.zero());
        for (const auto& [j, coeff] : k) x[static_cast<size_t>(j)] = coeff;
        for (const Scalar& s : mat_apply(m, x)) EXPECT_TRUE(s.is_zero());
      }
    }
  }
}

TEST(ExactLinearAlgebra, ColumnReducerExpressesSpanMembers) {
  std::mt19937_64 rng(15);
  QContext ctx = generic_ctx();
  for (int trial = 0; trial < 25; trial++) {
    Matrix m = rand_matrix(ctx, rng, rint(rng, 2, 6), rint(rng, 1, 5));
    ColumnReducer red(ctx);
    for (long c = 0; c < m.cols; c++) {
      SparseCol col;
      for (long r = 0; r < m.rows; r++)
        if (!m.at(r, c).is_zero()) col[r] = m.at(r, c);
      red.append(col);
    }
    std::vector<Scalar> x(static_cast<size_t>(m.cols), ctx.zero());
    for (auto& s : x)
      if (rint(rng, 0, 1) == 0) s = rand_coeff(ctx, rng);
    std::vector<Scalar> target = mat_apply(m, x);
    SparseCol target_col;
    for (long r = 0; r < m.rows; r++)
      if (!target[static_cast<size_t>(r)].is_zero()) target_col[r] = target[static_cast<size_t>(r)];
    EXPECT_TRUE(red.contains(target_col));
    auto combo = red.express(target_col);
    ASSERT_TRUE(combo.has_value());
    std::vector<Scalar> y(static_cast<size_t>(m.cols), ctx.zero());
    for (const auto& [j, coeff] : *combo) y[static_cast<size_t>(j)] = coeff;
    std::vector<Scalar> check = mat_apply(m, y);
    for (long r = 0; r < m.rows; r++)
      EXPECT_TRUE((check[static_cast<size_t>(r)] - target[static_cast<size_t>(r)]).is_zero());
  }
}

TEST(ExactLinearAlgebra, ColumnReducerRejectsOutsideVectors) {
  QContext ctx = generic_ctx();
  ColumnReducer red(ctx);
  SparseCol col;
  col[0] = ctx.one();
  col[1] = ctx.qpow(1);
  EXPECT_TRUE(red.append(col));
  SparseCol scaled;
  scaled[0] = ctx.qpow(3);
  scaled[1] = ctx.qpow(4);
  EXPECT_FALSE(red.append(scaled));
  EXPECT_EQ(red.rank(), 1);
  SparseCol outside;
  outside[1] = ctx.one();
  EXPECT_FALSE(red.contains(outside));
  EXPECT_FALSE(red.express(outside).has_value());
  EXPECT_TRUE(red.append(outside));
  EXPECT_TRUE(red.contains(outside));
}

TEST(ExactLinearAlgebra, ColumnsMatrixCoversImageSupport) {
  QContext ctx = generic_ctx();
  Indexer<long> basis;
  basis.intern(7);
  std::vector<std::map<long, Scalar>> columns(2);
  columns[0][3] = ctx.one();
  columns[1][3] = ctx.qpow(2);
  columns[1][4] = ctx.integer(-1);
  Matrix m = columns_matrix(ctx, basis, columns);
  EXPECT_EQ(m.rows, 3);
  EXPECT_EQ(m.cols, 2);
  EXPECT_TRUE(m.at(*basis.find(7), 0).is_zero());
  EXPECT_TRUE((m.at(*basis.find(3), 1) - ctx.qpow(2)).is_zero());
  EXPECT_TRUE((m.at(*basis.find(4), 1) + ctx.one()).is_zero());
  EXPECT_EQ(rank(m), 2);
}

}  // namespace
}  // namespace qsl2
