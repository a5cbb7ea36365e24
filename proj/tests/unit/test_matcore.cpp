#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "bigyro/errors.hpp"
#include "bigyro/matcore.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace bigyro;

TEST(Mat, ShapesAndAccess) {
  const Mat a = Mat::from_rows({{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(a.rows(), 2u);
  EXPECT_EQ(a.cols(), 3u);
  EXPECT_EQ(a(1, 2), 6.0);
  EXPECT_EQ(transpose(a)(2, 1), 6.0);
  EXPECT_EQ(Mat::identity(3)(1, 1), 1.0);
  EXPECT_EQ(Mat::identity(3)(0, 1), 0.0);
  EXPECT_EQ(a.max_abs(), 6.0);
}

TEST(Mat, RejectsBadConstruction) {
  EXPECT_THROW(Mat(2, 2, {1.0, 2.0, 3.0}), InputError);
  EXPECT_THROW(Mat(1, 1, {std::numeric_limits<double>::quiet_NaN()}), InputError);
  EXPECT_THROW(Mat::from_rows({{1, 2}, {3}}), InputError);
}

TEST(Mat, ArithmeticShapeChecks) {
  const Mat a(2, 3), b(2, 2);
  EXPECT_THROW(mul(a, b), InputError);
  EXPECT_THROW(add(a, b), InputError);
  EXPECT_THROW(max_abs_diff(a, b), InputError);
  EXPECT_EQ(mul(b, a).cols(), 3u);
}

TEST(Mat, Product) {
  const Mat a = Mat::from_rows({{1, 2}, {3, 4}});
  const Mat b = Mat::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(mul(a, b), Mat::from_rows({{2, 1}, {4, 3}}));
  EXPECT_EQ(a - a, Mat::zeros(2, 2));
  EXPECT_EQ(2.0 * a, a + a);
}

TEST(Mat, BlockAndAssembleRoundTrip) {
  gen::for_all(20, [](gen::Case& c) {
    const std::size_t m = c.index(1, 4), n = c.index(1, 4);
    const Mat g = c.matrix(m + n, m + n);
    const Mat back = assemble(block(g, 0, 0, m, m), block(g, 0, m, m, n), block(g, m, 0, n, m), block(g, m, m, n, n));
    EXPECT_EQ(back, g);
  });
  EXPECT_THROW(block(Mat(2, 2), 1, 1, 2, 2), InputError);
}

TEST(SpdSqrt, FrozenTwoByTwo) {
  // Reference values from the Eigen self-adjoint solver.
  const Mat r = spd_sqrt(Mat::from_rows({{2, 1}, {1, 2}}));
  const Mat expected = Mat::from_rows({{1.3660254037844386, 0.3660254037844386}, {0.3660254037844386, 1.3660254037844386}});
  EXPECT_LE(max_abs_diff(r, expected), 1e-15);
  EXPECT_LE(max_abs_diff(r, oracle::from_eigen(oracle::sqrtm(oracle::to_eigen(Mat::from_rows({{2, 1}, {1, 2}}))))),
            1e-15);
}

TEST(SpdSqrt, MatchesEigenOnRandomSpd) {
  gen::for_all(200, [](gen::Case& c) {
    const std::size_t n = c.index(1, 6);
    const Mat a = c.matrix(n, n);
    const Mat s = add(mul(transpose(a), a), Mat::identity(n));
    const Mat r = spd_sqrt(s);
    EXPECT_LE(max_abs_diff(r, oracle::from_eigen(oracle::sqrtm(oracle::to_eigen(s)))), 1e-11 * s.max_abs());
    EXPECT_LE(max_abs_diff(mul(r, r), s), 1e-11 * s.max_abs());
    EXPECT_EQ(r, transpose(r));
  });
}

TEST(SpdSqrt, Rejections) {
  EXPECT_THROW(spd_sqrt(Mat::from_rows({{1, 2}, {0, 1}})), InputError);
  EXPECT_THROW(spd_sqrt(Mat::from_rows({{1, 0}, {0, -1}})), DomainError);
  EXPECT_THROW(spd_sqrt(Mat::from_rows({{1, 1}, {1, 1}})), DomainError);
  EXPECT_THROW(spd_sqrt(Mat(2, 3)), InputError);
}

TEST(SymmetricEigen, AscendingAndReconstructs) {
  gen::for_all(50, [](gen::Case& c) {
    const std::size_t n = c.index(1, 6);
    const Mat a = c.matrix(n, n);
    const Mat s = add(a, transpose(a));
    const SymmetricEigen e = symmetric_eigen(s);
    for (std::size_t i = 1; i < n; ++i) EXPECT_LE(e.values[i - 1], e.values[i]);
    const Mat rebuilt = mul(mul(e.vectors, Mat::diag(e.values)), transpose(e.vectors));
    EXPECT_LE(max_abs_diff(rebuilt, s), 1e-11);
  });
}

TEST(Inverse, MatchesEigen) {
  gen::for_all(100, [](gen::Case& c) {
    const std::size_t n = c.index(1, 6);
    const Mat a = add(c.matrix(n, n), scale(Mat::identity(n), 5.0));
    const Mat inv = inverse(a);
    EXPECT_LE(max_abs_diff(inv, oracle::from_eigen(oracle::to_eigen(a).inverse())), 1e-12);
    EXPECT_LE(max_abs_diff(mul(a, inv), Mat::identity(n)), 1e-12);
  });
  EXPECT_THROW(inverse(Mat::from_rows({{1, 2}, {2, 4}})), DomainError);
  EXPECT_THROW(inverse(Mat(2, 3)), InputError);
}

TEST(Determinant, MatchesEigen) {
  gen::for_all(100, [](gen::Case& c) {
    const std::size_t n = c.index(1, 6);
    const Mat a = c.matrix(n, n);
    const double ref = oracle::to_eigen(a).determinant();
    EXPECT_NEAR(determinant(a), ref, 1e-10 * std::max(1.0, std::abs(ref)));
  });
}

TEST(SpecialOrthogonal, RotationsAndReflections) {
  gen::for_all(50, [](gen::Case& c) {
    const std::size_t n = c.index(1, 6);
    EXPECT_TRUE(is_special_orthogonal(c.rotation(n)));
  });
  EXPECT_FALSE(is_special_orthogonal(Mat::diag({1, -1})));
  EXPECT_FALSE(is_special_orthogonal(Mat::diag({2, 0.5})));
  EXPECT_FALSE(is_special_orthogonal(Mat(2, 3)));
}
