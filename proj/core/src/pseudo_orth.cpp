#include "bigyro/pseudo_orth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bigyro/errors.hpp"

namespace bigyro {

namespace {

Mat identity_plus_gram_right(const Mat& p) { return add(Mat::identity(p.cols()), mul(transpose(p), p)); }
Mat identity_plus_gram_left(const Mat& p) { return add(Mat::identity(p.rows()), mul(p, transpose(p))); }

}  // namespace

Mat metric(Signature sig) {
  std::vector<double> d(sig.dim(), 1.0);
  for (std::size_t i = sig.m; i < sig.dim(); ++i) d[i] = -1.0;
  return Mat::diag(d);
}

PseudoOrthElem::PseudoOrthElem(Mat matrix, Signature sig, double tol) : matrix_(std::move(matrix)), sig_(sig) {
  if (!is_member(matrix_, sig_, tol)) {
    throw InputError("PseudoOrthElem: matrix is not in the identity component of SO(" + std::to_string(sig.m) +
                     "," + std::to_string(sig.n) + ")");
  }
}

PseudoOrthElem compose(const PseudoOrthElem& a, const PseudoOrthElem& b, double tol) {
  if (!(a.signature() == b.signature())) throw InputError("compose: signature mismatch");
  return PseudoOrthElem(mul(a.matrix(), b.matrix()), a.signature(), tol);
}

PseudoOrthElem embed_rho(const Mat& om, std::size_t n, double tol) {
  if (!is_special_orthogonal(om, tol)) throw InputError("embed_rho: argument is not in SO(m)");
  const std::size_t m = om.rows();
  return PseudoOrthElem(assemble(om, Mat::zeros(m, n), Mat::zeros(n, m), Mat::identity(n)), {m, n}, tol);
}

PseudoOrthElem embed_lambda(std::size_t m, const Mat& on, double tol) {
  if (!is_special_orthogonal(on, tol)) throw InputError("embed_lambda: argument is not in SO(n)");
  const std::size_t n = on.rows();
  return PseudoOrthElem(assemble(Mat::identity(m), Mat::zeros(m, n), Mat::zeros(n, m), on), {m, n}, tol);
}

BiBoost beta(const Mat& p, double tol) {
  if (p.rows() == 0 || p.cols() == 0) throw InputError("beta: parameter must be non-empty");
  Mat matrix = assemble(spd_sqrt(identity_plus_gram_right(p), tol), transpose(p), p,
                        spd_sqrt(identity_plus_gram_left(p), tol));
  return {p, std::move(matrix)};
}

bool is_member(const Mat& g, Signature sig, double tol) {
  if (g.rows() != sig.dim() || g.cols() != sig.dim()) {
    throw InputError("is_member: expected a " + std::to_string(sig.dim()) + "x" + std::to_string(sig.dim()) +
                     " matrix");
  }
  const Mat eta = metric(sig);
  const double scale = std::max(1.0, g.max_abs() * g.max_abs());
  if (max_abs_diff(mul(mul(transpose(g), eta), g), eta) > tol * scale) return false;
  if (std::abs(determinant(g) - 1.0) > tol * scale) return false;
  return determinant(block(g, 0, 0, sig.m, sig.m)) > 0.0 && determinant(block(g, sig.m, sig.m, sig.n, sig.n)) > 0.0;
}

Factorization factor(const PseudoOrthElem& g, double tol) {
  const Signature sig = g.signature();
  const Mat& x = g.matrix();
  Mat p = block(x, sig.m, 0, sig.n, sig.m);
  Mat om = mul(block(x, 0, 0, sig.m, sig.m), inverse(spd_sqrt(identity_plus_gram_right(p), tol), tol));
  Mat on = mul(inverse(spd_sqrt(identity_plus_gram_left(p), tol), tol), block(x, sig.m, sig.m, sig.n, sig.n));
  const double scale = std::max(1.0, x.max_abs());
  if (!is_special_orthogonal(om, tol * scale) || !is_special_orthogonal(on, tol * scale)) {
    throw ConsistencyError("factor: recovered rotation factors are not special orthogonal");
  }
  return {std::move(om), std::move(p), std::move(on)};
}

Mat compose_factors(const Factorization& f, double tol) {
  const std::size_t m = f.om.rows();
  const std::size_t n = f.on.rows();
  if (f.p.rows() != n || f.p.cols() != m || !f.om.is_square() || !f.on.is_square()) {
    throw InputError("compose_factors: inconsistent factor shapes");
  }
  const Mat rho = assemble(f.om, Mat::zeros(m, n), Mat::zeros(n, m), Mat::identity(n));
  const Mat lambda = assemble(Mat::identity(m), Mat::zeros(m, n), Mat::zeros(n, m), f.on);
  return mul(mul(rho, beta(f.p, tol).matrix), lambda);
}

BiBoostProduct biboost_product(const Mat& p1, const Mat& p2, double tol) {
  if (p1.rows() != p2.rows() || p1.cols() != p2.cols()) throw InputError("biboost_product: shape mismatch");
  const BgParams params(p1.cols(), p1.rows(), tol);
  BiBoostProduct out{right_gyr(p1, p2, params), bg_add(p1, p2, params), left_gyr(p1, p2, params)};

  const Mat lhs = mul(beta(p1, tol).matrix, beta(p2, tol).matrix);
  const Mat rhs = compose_factors({out.right.matrix, out.sum, out.left.matrix}, tol);
  if (max_abs_diff(lhs, rhs) > tol * std::max(1.0, lhs.max_abs())) {
    throw ConsistencyError("biboost_product: product identity residual exceeds tolerance");
  }
  return out;
}

}  // namespace bigyro
