#include <gtest/gtest.h>

#include "bigyro/errors.hpp"
#include "bigyro/pseudo_orth.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace bigyro;

namespace {

Mat compose_random(gen::Case& c, std::size_t m, std::size_t n, Factorization& f) {
  f = {c.rotation(m), c.matrix(n, m, 1.5), c.rotation(n)};
  return compose_factors(f);
}

}  // namespace

TEST(Metric, Diagonal) { EXPECT_EQ(metric({2, 1}), Mat::diag({1, 1, -1})); }

TEST(Beta, ZeroIsIdentityAndMembersEverywhere) {
  EXPECT_EQ(beta(Mat(2, 3)).matrix, Mat::identity(5));
  gen::for_all(100, [](gen::Case& c) {
    const std::size_t m = c.index(1, 4), n = c.index(1, 4);
    const Mat p = c.matrix(n, m);
    const Mat b = beta(p).matrix;
    EXPECT_TRUE(is_member(b, {m, n}));
    EXPECT_LE(max_abs_diff(b, oracle::from_eigen(oracle::beta(oracle::to_eigen(p)))), 1e-11 * b.max_abs());
  });
}

TEST(Embeddings, RequireRotations) {
  EXPECT_THROW(embed_rho(Mat::diag({1, -1}), 1), InputError);
  EXPECT_THROW(embed_lambda(1, Mat::diag({2, 0.5})), InputError);
  const Mat r = Mat::from_rows({{0, -1}, {1, 0}});
  EXPECT_EQ(embed_rho(r, 1).matrix(), Mat::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(embed_lambda(1, r).matrix(), Mat::from_rows({{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}));
}

TEST(Membership, Negatives) {
  const Signature sig{2, 1};
  EXPECT_TRUE(is_member(Mat::identity(3), sig));
  EXPECT_FALSE(is_member(Mat::diag({2, 1, 1}), sig));     // breaks the metric
  EXPECT_FALSE(is_member(Mat::diag({1, -1, -1}), sig));   // det +1, wrong component
  EXPECT_FALSE(is_member(Mat::diag({-1, 1, 1}), sig));    // det -1
  EXPECT_THROW(is_member(Mat::identity(2), sig), InputError);
  EXPECT_THROW(PseudoOrthElem(Mat::diag({2, 1, 1}), sig), InputError);
}

TEST(Factor, IdentityGivesTrivialFactors) {
  const Factorization f = factor(PseudoOrthElem(Mat::identity(3), {2, 1}));
  EXPECT_EQ(f.p, Mat(1, 2));
  EXPECT_LE(max_abs_diff(f.om, Mat::identity(2)), 1e-15);
  EXPECT_LE(max_abs_diff(f.on, Mat::identity(1)), 1e-15);
}

TEST(Factor, RoundTripRecoversEachFactor) {
  gen::for_all(300, [](gen::Case& c) {
    const std::size_t m = c.index(1, 4), n = c.index(1, 4);
    Factorization truth;
    const Mat g = compose_random(c, m, n, truth);
    const Factorization f = factor(PseudoOrthElem(g, {m, n}));
    EXPECT_LE(max_abs_diff(f.om, truth.om), 1e-8);
    EXPECT_LE(max_abs_diff(f.p, truth.p), 1e-8);
    EXPECT_LE(max_abs_diff(f.on, truth.on), 1e-8);
    // Factoring the recomposition gives the same factors again.
    const Factorization again = factor(PseudoOrthElem(compose_factors(f), {m, n}));
    EXPECT_LE(max_abs_diff(again.p, f.p), 1e-9);
  });
}

TEST(Compose, RevalidatesAndMultiplies) {
  gen::for_all(20, [](gen::Case& c) {
    const Signature sig{2, 2};
    const PseudoOrthElem a(beta(c.matrix(2, 2)).matrix, sig), b(beta(c.matrix(2, 2)).matrix, sig);
    EXPECT_EQ(compose(a, b).matrix(), mul(a.matrix(), b.matrix()));
  });
  EXPECT_THROW(compose(PseudoOrthElem(Mat::identity(2), {1, 1}), PseudoOrthElem(Mat::identity(3), {2, 1})),
               InputError);
}

TEST(BiBoostProduct, MatchesOracle) {
  gen::for_all(200, [](gen::Case& c) {
    const std::size_t m = c.index(1, 4), n = c.index(1, 4);
    const Mat p1 = c.matrix(n, m), p2 = c.matrix(n, m);
    const BiBoostProduct bp = biboost_product(p1, p2);
    const auto ref = oracle::biboost_blocks(oracle::to_eigen(p1), oracle::to_eigen(p2));
    EXPECT_LE(max_abs_diff(bp.left.matrix, oracle::from_eigen(ref.left)), 1e-9);
    EXPECT_LE(max_abs_diff(bp.right.matrix, oracle::from_eigen(ref.right)), 1e-9);
    const Mat lhs = mul(beta(p1).matrix, beta(p2).matrix);
    const Mat rhs = compose_factors({bp.right.matrix, bp.sum, bp.left.matrix});
    EXPECT_LE(max_abs_diff(lhs, rhs) / std::max(1.0, lhs.max_abs()), 1e-12);
  });
  EXPECT_THROW(biboost_product(Mat(1, 2), Mat(2, 1)), InputError);
}
