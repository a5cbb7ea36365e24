#include <algorithm>
#include <cmath>
#include <string>

#include "bigyro/bigyro_matrix.hpp"
#include "bigyro/clifford.hpp"
#include "bigyro/errors.hpp"
#include "bigyro/rng.hpp"

namespace bigyro {

namespace {

constexpr double kMinLiftSuccess = 0.99;
constexpr std::size_t kMaxSpinDim = 4;

std::vector<double> column(const Mat& a, std::size_t j) {
  std::vector<double> v(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) v[i] = a(i, j);
  return v;
}

/// Matrix of u ↦ u - 2 B(u, w) / Q(w) · w.
Mat reflection(const CliffordAlgebra& alg, const std::vector<double>& w, double q) {
  const std::size_t d = alg.dim();
  std::vector<double> r(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r[i * d + j] = (i == j ? 1.0 : 0.0) - 2.0 * w[i] * w[j] * alg.metric(j) / q;
  return Mat(d, d, std::move(r));
}

double rel(const Mat& a, const Mat& b) { return max_abs_diff(a, b) / std::max({1.0, a.max_abs(), b.max_abs()}); }

/// Distance between two multivectors up to sign, relative to their size.
double rel_up_to_sign(const Multivector& a, const Multivector& b) {
  const double d = std::min(max_abs_diff(a, b), max_abs_diff(a, -b));
  return d / std::max({1.0, a.max_abs(), b.max_abs()});
}

}  // namespace

SpinElem lift_to_spin(const PseudoOrthElem& g, double tol) {
  const Signature sig = g.signature();
  const CliffordAlgebra alg(sig.m, sig.n);
  const std::size_t d = alg.dim();
  const double scale = std::max(1.0, g.matrix().max_abs());
  const double floor = tol * scale * scale;

  Mat lam = g.matrix();
  std::vector<Multivector> pivots;
  auto reflect = [&](const std::vector<double>& w) {
    const double q = alg.quadratic(w);
    if (std::abs(q) <= floor) throw LiftFailure("lift_to_spin: null reflection pivot");
    lam = mul(reflection(alg, w, q), lam);
    pivots.push_back(Multivector::vector(alg, w));
  };

  // Each step fixes e_i while keeping e_1..e_{i-1} fixed: both candidate pivots
  // are B-orthogonal to the earlier basis vectors. Since
  // Q(Λe - e) + Q(Λe + e) = 4 Q(e) = ±4, the larger one is never null.
  for (std::size_t i = 0; i < d; ++i) {
    const std::vector<double> image = column(lam, i);
    std::vector<double> minus = image, plus = image;
    minus[i] -= 1.0;
    plus[i] += 1.0;
    double mx = 0.0;
    for (double x : minus) mx = std::max(mx, std::abs(x));
    if (mx <= tol * scale) continue;
    if (std::abs(alg.quadratic(minus)) >= std::abs(alg.quadratic(plus))) {
      reflect(minus);
    } else {
      reflect(plus);
      std::vector<double> e(d, 0.0);
      e[i] = 1.0;
      reflect(e);
    }
  }
  if (pivots.size() % 2 != 0) throw LiftFailure("lift_to_spin: odd number of reflections");

  SpinElem s = make_spin(alg, pivots, tol);
  if (max_abs_diff(twisted_adjoint(s.product, tol), g.matrix()) > floor) {
    throw LiftFailure("lift_to_spin: reconstruction misses the target");
  }
  return s;
}

Report verify_spin_decomposition(std::size_t m, std::size_t n, std::size_t trials, std::uint64_t seed, double tol) {
  if (m == 0 || n == 0) throw InputError("spin verify: m and n must be at least 1");
  if (m + n > kMaxSpinDim) throw InputError("spin verify: m + n must be at most " + std::to_string(kMaxSpinDim));
  if (trials == 0) throw InputError("spin verify: trials must be positive");
  if (!(tol > 0.0)) throw InputError("spin verify: tol must be positive");

  const CliffordAlgebra alg(m, n);
  const Signature sig{m, n};
  const BgParams params(m, n, kDefaultTol);
  const std::size_t d = m + n;
  const Mat id = Mat::identity(d);

  Report report;
  std::size_t failures = 0;
  std::string first_failure;

  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_engine(seed, t);
    const Mat p1 = random_matrix(rng, n, m);
    const Mat p2 = random_matrix(rng, n, m);
    const Mat uv = random_matrix(rng, 2, d);
    std::uniform_real_distribution<double> scalar_dist(0.5, 2.0);
    const double c = scalar_dist(rng);
    const std::vector<double> u(uv.data().begin(), uv.data().begin() + static_cast<std::ptrdiff_t>(d));
    const std::vector<double> v(uv.data().begin() + static_cast<std::ptrdiff_t>(d), uv.data().end());

    const std::string witness = "seed=" + std::to_string(seed) + " trial=" + std::to_string(t);
    auto rec = [&](const char* law, double r) { report.record(law, r, tol, witness); };
    auto lift = [&](const Mat& g) { return lift_to_spin(PseudoOrthElem(g, sig, tol), kDefaultTol); };

    try {
      const Mat b1 = beta(p1).matrix;
      const Mat b2 = beta(p2).matrix;
      const SpinElem s1 = lift(b1);
      const SpinElem s2 = lift(b2);
      const Multivector& g1 = s1.product;
      const Multivector& g2 = s2.product;
      const Multivector g12 = gp(g1, g2);

      const Mat t1 = twisted_adjoint(g1, tol);
      const Mat t2 = twisted_adjoint(g2, tol);
      const Mat t12 = twisted_adjoint(g12, tol);
      rec("lift_roundtrip", std::max(rel(t1, b1), rel(t2, b2)));
      rec("homomorphism", rel(t12, mul(t1, t2)));
      report.expect("spin_image_in_identity_component", is_member(t12, sig, tol), witness);

      rec("sign_ambiguity", rel_up_to_sign(lift(t12).product, g12));

      const Mat rg = right_gyr(p1, p2, params).matrix;
      const Mat sum = bg_add(p1, p2, params);
      const Mat lg = left_gyr(p1, p2, params).matrix;
      const Factorization f = factor(PseudoOrthElem(t12, sig, tol), tol);
      rec("transported_factorization", std::max({rel(f.om, rg), rel(f.p, sum), rel(f.on, lg)}));

      const Multivector coset = gp(gp(lift(embed_rho(rg, n, tol).matrix()).product, lift(beta(sum).matrix).product),
                                   lift(embed_lambda(m, lg, tol).matrix()).product);
      rec("coset_factorization", rel_up_to_sign(coset, g12));

      double q_res = 0.0;
      const double qu = alg.quadratic(u);
      auto q_check = [&](const Mat& a) {
        std::vector<double> au(d, 0.0);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) au[i] += a(i, j) * u[j];
        double norm2 = 0.0;
        for (double x : au) norm2 += x * x;
        q_res = std::max(q_res, std::abs(alg.quadratic(au) - qu) / std::max(1.0, norm2));
      };
      for (const Multivector& f1 : s1.factors) q_check(twisted_adjoint(f1, tol));
      q_check(t1);
      q_check(t12);
      rec("q_preservation", q_res);

      rec("kernel_sign", std::max(rel(twisted_adjoint(-g1, tol), t1),
                                  rel(twisted_adjoint(Multivector::scalar(alg, c), tol), id)));
      // β(P) = I only at P = 0, so a non-scalar lift must act nontrivially.
      report.expect("kernel_nontrivial", p1.max_abs() == 0.0 || max_abs_diff(t1, id) > tol, witness);

      const Multivector mu = Multivector::vector(alg, u);
      const Multivector mv = Multivector::vector(alg, v);
      const Multivector anti = add(gp(mu, mv), gp(mv, mu));
      rec("anticommutator", max_abs_diff(anti, Multivector::scalar(alg, 2.0 * alg.bilinear(u, v))) /
                                std::max(1.0, anti.max_abs()));
      rec("grade_involution_automorphism",
          max_abs_diff(grade_involution(g12), gp(grade_involution(g1), grade_involution(g2))) /
              std::max(1.0, g12.max_abs()));
    } catch (const LiftFailure& e) {
      if (failures++ == 0) first_failure = witness + ": " + e.what();
    }
  }

  const double failure_rate = static_cast<double>(failures) / static_cast<double>(trials);
  report.add(LawResult{"lift_success_rate", trials, failure_rate, failure_rate <= 1.0 - kMinLiftSuccess,
                       failure_rate <= 1.0 - kMinLiftSuccess ? std::string{} : first_failure, failures});
  return report;
}

}  // namespace bigyro
