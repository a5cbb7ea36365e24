#include <gtest/gtest.h>

#include <cmath>

#include "bigyro/bigyro_matrix.hpp"
#include "bigyro/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace bigyro;

namespace {

Mat scalar(double x) { return Mat::from_rows({{x}}); }

}  // namespace

TEST(BgParams, Validation) {
  EXPECT_THROW(BgParams(0, 2), InputError);
  EXPECT_THROW(BgParams(2, 0), InputError);
  EXPECT_THROW(BgParams(2, 2, 0.0), InputError);
  EXPECT_THROW(BgParams(2, 2, -1.0), InputError);
  EXPECT_NO_THROW(BgParams(1, 1));
}

TEST(BgAdd, ZeroIsTwoSidedIdentity) {
  gen::for_all(20, [](gen::Case& c) {
    const std::size_t m = c.index(1, 4), n = c.index(1, 4);
    const BgParams params(m, n);
    const Mat p = c.matrix(n, m);
    const Mat zero(n, m);
    EXPECT_LE(max_abs_diff(bg_add(p, zero, params), p), 1e-14);
    EXPECT_LE(max_abs_diff(bg_add(zero, p, params), p), 1e-14);
    EXPECT_LE(max_abs_diff(left_gyr(p, zero, params).matrix, Mat::identity(n)), 1e-12);
    EXPECT_LE(max_abs_diff(right_gyr(p, zero, params).matrix, Mat::identity(m)), 1e-12);
  });
}

TEST(BgAdd, ShapeMismatch) {
  const BgParams params(2, 3);
  EXPECT_THROW(bg_add(Mat(3, 2), Mat(2, 3), params), InputError);
  EXPECT_THROW(bg_add(Mat(2, 2), Mat(2, 2), params), InputError);
  EXPECT_THROW(left_gyr(Mat(3, 2), Mat(3, 3), params), InputError);
  EXPECT_THROW(right_gyr(Mat(3, 3), Mat(3, 2), params), InputError);
}

TEST(BgAdd, ScalarCaseIsSinhAddition) {
  // For m = n = 1, sinh(u1) (+) sinh(u2) = sinh(u1 + u2) and both gyrations are [1].
  const BgParams params(1, 1);
  gen::for_all(500, [&](gen::Case& c) {
    const double u1 = c.uniform(-3, 3), u2 = c.uniform(-3, 3);
    const double got = bg_add(scalar(std::sinh(u1)), scalar(std::sinh(u2)), params)(0, 0);
    const double want = std::sinh(u1 + u2);
    EXPECT_LE(std::abs(got - want), 1e-12 * std::max(1.0, std::abs(want)));
    EXPECT_NEAR(left_gyr(scalar(std::sinh(u1)), scalar(std::sinh(u2)), params).matrix(0, 0), 1.0, 1e-12);
    EXPECT_NEAR(right_gyr(scalar(std::sinh(u1)), scalar(std::sinh(u2)), params).matrix(0, 0), 1.0, 1e-12);
  });
}

TEST(BgAdd, FrozenScalarSample) {
  const BgParams params(1, 1);
  EXPECT_NEAR(bg_add(scalar(std::sinh(1.0)), scalar(std::sinh(0.5)), params)(0, 0), 2.1292794550948173, 1e-15);
}

TEST(BgAdd, MatchesBiBoostBlockOracle) {
  // The oracle reads the sum and both gyrations off the blocks of β(P1)β(P2).
  gen::for_all(200, [](gen::Case& c) {
    const std::size_t m = c.index(1, 4), n = c.index(1, 4);
    const BgParams params(m, n);
    const Mat p1 = c.matrix(n, m), p2 = c.matrix(n, m);
    const auto ref = oracle::biboost_blocks(oracle::to_eigen(p1), oracle::to_eigen(p2));
    const double s = std::max(1.0, ref.sum.cwiseAbs().maxCoeff());
    EXPECT_LE(max_abs_diff(bg_add(p1, p2, params), oracle::from_eigen(ref.sum)), 1e-10 * s);
    EXPECT_LE(max_abs_diff(left_gyr(p1, p2, params).matrix, oracle::from_eigen(ref.left)), 1e-9);
    EXPECT_LE(max_abs_diff(right_gyr(p1, p2, params).matrix, oracle::from_eigen(ref.right)), 1e-9);
    EXPECT_LE(max_abs_diff(bg_add(p1, p2, params), oracle::from_eigen(oracle::bg_add(oracle::to_eigen(p1),
                                                                                    oracle::to_eigen(p2)))),
              1e-10 * s);
  });
}

TEST(Gyrations, AreRotations) {
  gen::for_all(100, [](gen::Case& c) {
    const std::size_t m = c.index(1, 5), n = c.index(1, 5);
    const BgParams params(m, n);
    const Mat p1 = c.matrix(n, m), p2 = c.matrix(n, m);
    EXPECT_TRUE(is_special_orthogonal(left_gyr(p1, p2, params).matrix, 1e-10));
    EXPECT_TRUE(is_special_orthogonal(right_gyr(p1, p2, params).matrix, 1e-10));
    const LeftGyr l = left_gyr(p1, p2, params);
    EXPECT_LE(max_abs_diff(apply_lgyr(inverse(l), apply_lgyr(l, p1)), p1), 1e-12);
  });
}

TEST(BgGroupAdd, IsSumTimesReversedRightGyration) {
  gen::for_all(50, [](gen::Case& c) {
    const std::size_t m = c.index(1, 4), n = c.index(1, 4);
    const BgParams params(m, n);
    const Mat a = c.matrix(n, m), b = c.matrix(n, m);
    EXPECT_LE(max_abs_diff(bg_group_add(a, b, params), mul(bg_add(a, b, params), right_gyr(b, a, params).matrix)),
              1e-13 * std::max(1.0, bg_add(a, b, params).max_abs()));
  });
}

TEST(BgGroupAdd, CompositeRightGyrationNeedsGyratedArgument) {
  // rgyr[gyr[a,b]c, a (+)' b] ∘ rgyr[b,a] = rgyr[b (+)' c, a] ∘ rgyr[c,b] holds;
  // the variant with plain c in the first slot does not.
  const BgParams params(2, 2);
  double literal_worst = 0.0;
  gen::for_all(50, [&](gen::Case& c) {
    const Mat a = c.matrix(2, 2), b = c.matrix(2, 2), x = c.matrix(2, 2);
    auto R = [&](const Mat& p, const Mat& q) { return right_gyr(p, q, params).matrix; };
    const Mat ab = bg_group_add(a, b, params), bx = bg_group_add(b, x, params);
    const Mat rhs = mul(R(x, b), R(bx, a));
    const Mat gx = gyrator(a, b, params).apply(x);
    EXPECT_LE(max_abs_diff(mul(R(b, a), R(gx, ab)), rhs), 1e-10);
    literal_worst = std::max(literal_worst, max_abs_diff(mul(R(b, a), R(x, ab)), rhs));
  });
  EXPECT_GT(literal_worst, 1e-2);
}

TEST(CheckAxioms, PassesAndIsDeterministic) {
  const BgParams params(2, 3);
  const Report a = check_axioms(params, 25, 7);
  const Report b = check_axioms(params, 25, 7);
  EXPECT_TRUE(a.all_pass()) << a.to_text();
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  ASSERT_NE(a.find("BG3.bigyroassociative"), nullptr);
  ASSERT_NE(a.find("gyrogroup.gyrocommutative"), nullptr);
  EXPECT_EQ(a.find("BG3.bigyroassociative")->trials, 25u);
}

TEST(CheckAxioms, RejectsZeroTrials) { EXPECT_THROW(check_axioms(BgParams(1, 1), 0, 1), InputError); }

TEST(CheckAxioms, ImpossibleToleranceFailsWithWitness) {
  const Report r = check_axioms(BgParams(2, 2, 1e-18), 5, 42);
  EXPECT_FALSE(r.all_pass());
  for (const LawResult& law : r.laws())
    if (!law.pass) EXPECT_NE(law.witness.find("seed=42"), std::string::npos) << law.law;
}
