#include <gtest/gtest.h>

#include <random>
#include <set>

#include <nexakt/exactlin.hpp>
#include <nexakt/error.hpp>

using namespace nexakt;

namespace {

Mat random_mat(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, double density = 1.0) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.p() - 1);
  std::bernoulli_distribution keep(density);
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = keep(rng) ? d(rng) : 0;
  return m;
}

// Size of the row space found by enumerating every combination of rows.
std::size_t row_space_size(const Mat& a) {
  const auto p = a.field().p();
  std::set<std::vector<Residue>> seen;
  std::vector<Residue> coeff(a.rows(), 0);
  while (true) {
    std::vector<Residue> v(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) v[j] = a.field().add(v[j], a.field().mul(coeff[i], a(i, j)));
    seen.insert(v);
    std::size_t i = 0;
    while (i < a.rows() && ++coeff[i] == p) coeff[i++] = 0;
    if (i == a.rows()) break;
  }
  return seen.size();
}

}  // namespace

TEST(Field, RejectsComposites) {
  EXPECT_THROW(Field(4), Error);
  EXPECT_THROW(Field(1), Error);
  EXPECT_NO_THROW(Field(2));
  EXPECT_NO_THROW(Field(2147483647u));
  EXPECT_EQ(Field(7).inv(3), 5u);
}

TEST(Rref, IdentityOverF5) {
  Field f(5);
  Rref r = rref(Mat::identity(f, 2));
  EXPECT_EQ(r.reduced, Mat::identity(f, 2));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, ZeroOverF7) {
  Field f(7);
  Rref r = rref(Mat::zero(f, 3, 3));
  EXPECT_TRUE(r.reduced.is_zero());
  EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, HandReduction) {
  Field f(5);
  Rref r = rref(Mat::from_rows(f, {{2, 4}, {1, 2}}));
  EXPECT_EQ(r.reduced, Mat::from_rows(f, {{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, EmptyShapes) {
  Field f(3);
  EXPECT_EQ(rank(Mat(f, 0, 4)), 0u);
  EXPECT_EQ(rank(Mat(f, 4, 0)), 0u);
  EXPECT_EQ(kernel_basis(Mat(f, 0, 3)).cols(), 3u);
  EXPECT_EQ(kernel_basis(Mat(f, 3, 0)).cols(), 0u);
}

TEST(Solve, Identity) {
  Field f(101);
  Mat b = Mat::from_rows(f, {{3}, {-1}, {7}});
  auto x = solve_linear(Mat::identity(f, 3), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(Solve, Inconsistent) {
  Field f(101);
  EXPECT_FALSE(solve_linear(Mat::from_rows(f, {{1}, {0}}), Mat::from_rows(f, {{0}, {1}})));
}

TEST(Solve, UnderdeterminedOverF2) {
  Field f(2);
  Mat a = Mat::from_rows(f, {{1, 1}});
  auto x = solve_linear(a, Mat::from_rows(f, {{0}}));
  ASSERT_TRUE(x);
  EXPECT_TRUE((a * *x).is_zero());
}

TEST(Solve, ShapeMismatch) {
  Field f(5);
  EXPECT_THROW(solve_linear(Mat::identity(f, 2), Mat(f, 3, 1)), ShapeError);
}

TEST(Kernel, Examples) {
  Field f2(2), f(101);
  EXPECT_EQ(kernel_basis(Mat::identity(f, 4)).cols(), 0u);
  Mat k = kernel_basis(Mat::zero(f, 1, 3));
  EXPECT_EQ(k.cols(), 3u);
  EXPECT_EQ(rank(k), 3u);
  Mat k2 = kernel_basis(Mat::from_rows(f2, {{1, 1}}));
  ASSERT_EQ(k2.cols(), 1u);
  EXPECT_EQ(k2, Mat::from_rows(f2, {{1}, {1}}));
}

TEST(Properties, RandomMatrices) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    Field f(p);
    for (int t = 0; t < 60; ++t) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      Mat a = random_mat(f, r, c, rng, 0.6);
      Rref rr = rref(a);
      EXPECT_EQ(rank(a) + kernel_basis(a).cols(), c);
      EXPECT_TRUE((a * kernel_basis(a)).is_zero());
      EXPECT_EQ(rref(rr.reduced).reduced, rr.reduced);
      for (std::size_t i = 1; i < rr.pivots.size(); ++i) EXPECT_LT(rr.pivots[i - 1], rr.pivots[i]);
      Mat x0 = random_mat(f, c, 2, rng);
      Mat b = a * x0;
      auto x = solve_linear(a, b);
      ASSERT_TRUE(x);
      EXPECT_EQ(a * *x, b);
      EXPECT_TRUE((left_kernel_basis(a) * a).is_zero());
      EXPECT_EQ(left_kernel_basis(a).rows() + rank(a), r);
    }
  }
}

TEST(Properties, RankAgainstEnumeratedRowSpace) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    Field f(p);
    for (int t = 0; t < 40; ++t) {
      Mat a = random_mat(f, 1 + rng() % 4, 1 + rng() % 4, rng, 0.5);
      std::size_t size = 1;
      for (std::size_t i = 0; i < rank(a); ++i) size *= p;
      EXPECT_EQ(row_space_size(a), size);
    }
  }
}

TEST(Properties, ComplementColumns) {
  Field f(7);
  Mat span = Mat::from_rows(f, {{1}, {0}, {0}});
  Mat cand = Mat::from_rows(f, {{2, 0, 1}, {0, 0, 1}, {0, 0, 0}});
  EXPECT_EQ(complement_columns(span, cand), (std::vector<std::size_t>{2}));
}
