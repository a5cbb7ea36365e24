#include "bigyro/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "bigyro/errors.hpp"

namespace bigyro {

namespace {

void require_same(const CliffordAlgebra& a, const CliffordAlgebra& b, const char* what) {
  if (!(a == b)) throw InputError(std::string(what) + ": multivectors belong to different algebras");
}

}  // namespace

CliffordAlgebra::CliffordAlgebra(std::size_t m, std::size_t n) : m_(m), n_(n) {
  if (m + n == 0 || m + n > kMaxDim) {
    throw InputError("CliffordAlgebra: m + n must be in 1.." + std::to_string(kMaxDim));
  }
}

double CliffordAlgebra::blade_sign(std::uint32_t a, std::uint32_t b) const noexcept {
  // Transpositions needed to move every basis vector of b past the higher ones of a.
  int swaps = 0;
  for (std::uint32_t x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  double s = (swaps & 1) ? -1.0 : 1.0;
  for (std::uint32_t common = a & b; common != 0; common &= common - 1) {
    s *= metric(static_cast<std::size_t>(std::countr_zero(common)));
  }
  return s;
}

double CliffordAlgebra::quadratic(std::span<const double> v) const { return bilinear(v, v); }

double CliffordAlgebra::bilinear(std::span<const double> u, std::span<const double> v) const {
  if (u.size() != dim() || v.size() != dim()) throw InputError("bilinear: vector has wrong dimension");
  double s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) s += metric(i) * u[i] * v[i];
  return s;
}

Multivector::Multivector(CliffordAlgebra alg) : alg_(alg), coeffs_(alg.blades(), 0.0) {}

Multivector::Multivector(CliffordAlgebra alg, std::vector<double> coeffs) : alg_(alg), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != alg_.blades()) {
    throw InputError("Multivector: expected " + std::to_string(alg_.blades()) + " coefficients");
  }
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw InputError("Multivector: non-finite coefficient");
}

Multivector Multivector::scalar(CliffordAlgebra alg, double s) { return blade(alg, 0, s); }

Multivector Multivector::blade(CliffordAlgebra alg, std::uint32_t mask, double coeff) {
  if (mask >= alg.blades()) throw InputError("Multivector::blade: mask out of range");
  std::vector<double> c(alg.blades(), 0.0);
  c[mask] = coeff;
  return Multivector(alg, std::move(c));
}

Multivector Multivector::basis_vector(CliffordAlgebra alg, std::size_t i) {
  if (i >= alg.dim()) throw InputError("Multivector::basis_vector: index out of range");
  return blade(alg, std::uint32_t{1} << i);
}

Multivector Multivector::vector(CliffordAlgebra alg, std::span<const double> v) {
  if (v.size() != alg.dim()) throw InputError("Multivector::vector: expected " + std::to_string(alg.dim()) + " entries");
  std::vector<double> c(alg.blades(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) c[std::size_t{1} << i] = v[i];
  return Multivector(alg, std::move(c));
}

std::vector<double> Multivector::vector_part() const {
  std::vector<double> v(alg_.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[std::size_t{1} << i];
  return v;
}

double Multivector::off_grade(std::size_t g) const {
  double worst = 0.0;
  for (std::size_t mask = 0; mask < coeffs_.size(); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) != g) worst = std::max(worst, std::abs(coeffs_[mask]));
  return worst;
}

double Multivector::max_abs() const noexcept {
  double worst = 0.0;
  for (double c : coeffs_) worst = std::max(worst, std::abs(c));
  return worst;
}

Multivector gp(const Multivector& a, const Multivector& b) {
  require_same(a.algebra(), b.algebra(), "gp");
  const CliffordAlgebra& alg = a.algebra();
  std::vector<double> out(alg.blades(), 0.0);
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  for (std::uint32_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0.0) continue;
    for (std::uint32_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0.0) continue;
      out[i ^ j] += alg.blade_sign(i, j) * ca[i] * cb[j];
    }
  }
  return Multivector(alg, std::move(out));
}

Multivector add(const Multivector& a, const Multivector& b) {
  require_same(a.algebra(), b.algebra(), "add");
  std::vector<double> out(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs()[i];
  return Multivector(a.algebra(), std::move(out));
}

Multivector sub(const Multivector& a, const Multivector& b) { return add(a, scale(b, -1.0)); }

Multivector scale(const Multivector& a, double s) {
  std::vector<double> out(a.coeffs().begin(), a.coeffs().end());
  for (double& c : out) c *= s;
  return Multivector(a.algebra(), std::move(out));
}

double max_abs_diff(const Multivector& a, const Multivector& b) { return sub(a, b).max_abs(); }

Multivector grade_involution(const Multivector& a) {
  std::vector<double> out(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t mask = 0; mask < out.size(); ++mask)
    if (std::popcount(mask) & 1) out[mask] = -out[mask];
  return Multivector(a.algebra(), std::move(out));
}

Multivector inverse(const Multivector& a, double tol) {
  const CliffordAlgebra& alg = a.algebra();
  const std::size_t d = alg.blades();
  // Column j of the left-multiplication matrix is a·blade(j).
  std::vector<double> lm(d * d, 0.0);
  for (std::uint32_t i = 0; i < d; ++i) {
    if (a.coeffs()[i] == 0.0) continue;
    for (std::uint32_t j = 0; j < d; ++j) lm[(i ^ j) * d + j] += alg.blade_sign(i, j) * a.coeffs()[i];
  }
  Mat inv;
  try {
    inv = bigyro::inverse(Mat(d, d, std::move(lm)), tol);
  } catch (const DomainError&) {
    throw DomainError("multivector is not invertible");
  }
  // a·x = 1 gives x = L⁻¹ e_0, the first column.
  std::vector<double> x(d);
  for (std::size_t r = 0; r < d; ++r) x[r] = inv(r, 0);
  return Multivector(alg, std::move(x));
}

Mat twisted_adjoint(const Multivector& g, double tol) {
  const CliffordAlgebra& alg = g.algebra();
  const Multivector ginv = inverse(g, tol);
  const Multivector ghat = grade_involution(g);
  const std::size_t d = alg.dim();
  std::vector<double> out(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    const Multivector image = gp(gp(ghat, Multivector::basis_vector(alg, j)), ginv);
    if (image.off_grade(1) > tol * std::max(1.0, image.max_abs())) {
      throw NotInCliffordGroup("twisted adjoint: image of e_" + std::to_string(j + 1) + " is not a vector");
    }
    const std::vector<double> v = image.vector_part();
    for (std::size_t i = 0; i < d; ++i) out[i * d + j] = v[i];
  }
  return Mat(d, d, std::move(out));
}

SpinElem make_spin(const CliffordAlgebra& alg, const std::vector<Multivector>& vectors, double tol) {
  if (vectors.size() % 2 != 0) throw InputError("make_spin: the number of vectors must be even");
  SpinElem s{{}, Multivector::scalar(alg, 1.0)};
  for (const Multivector& v : vectors) {
    require_same(alg, v.algebra(), "make_spin");
    if (v.off_grade(1) > tol * std::max(1.0, v.max_abs())) throw InputError("make_spin: input is not a vector");
    const std::vector<double> c = v.vector_part();
    const double q = alg.quadratic(c);
    double norm2 = 0.0;
    for (double x : c) norm2 += x * x;
    if (std::abs(q) <= tol * std::max(1.0, norm2)) throw DomainError("make_spin: null vector");
    Multivector unit = scale(Multivector::vector(alg, c), 1.0 / std::sqrt(std::abs(q)));
    s.product = gp(s.product, unit);
    s.factors.push_back(std::move(unit));
  }
  return s;
}

}  // namespace bigyro
