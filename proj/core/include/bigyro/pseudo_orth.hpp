#pragma once

#include <cstddef>

#include "bigyro/bigyro_matrix.hpp"
#include "bigyro/matcore.hpp"

namespace bigyro {

struct Signature {
  std::size_t m = 1;
  std::size_t n = 1;

  std::size_t dim() const noexcept { return m + n; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// η = diag(I_m, -I_n).
Mat metric(Signature sig);

/// An element of the identity component of SO(m, n). Every constructor
/// path validates membership.
class PseudoOrthElem {
 public:
  /// Throws InputError if `matrix` fails is_member at `tol`.
  PseudoOrthElem(Mat matrix, Signature sig, double tol = kDefaultTol);

  const Mat& matrix() const noexcept { return matrix_; }
  Signature signature() const noexcept { return sig_; }

 private:
  Mat matrix_;
  Signature sig_;
};

/// Matrix product of two elements of the same signature, revalidated at `tol`.
PseudoOrthElem compose(const PseudoOrthElem& a, const PseudoOrthElem& b, double tol = kDefaultTol);

/// The bi-boost β(P) = [[sqrt(I_m + PᵀP), Pᵀ], [P, sqrt(I_n + PPᵀ)]].
struct BiBoost {
  Mat param;
  Mat matrix;
};

/// g = ρ(om) · β(p) · λ(on).
struct Factorization {
  Mat om;
  Mat p;
  Mat on;
};

/// ρ(O_m) = diag(O_m, I_n). Throws InputError unless om ∈ SO(m) at `tol`.
PseudoOrthElem embed_rho(const Mat& om, std::size_t n, double tol = kDefaultTol);

/// λ(O_n) = diag(I_m, O_n). Throws InputError unless on ∈ SO(n) at `tol`.
PseudoOrthElem embed_lambda(std::size_t m, const Mat& on, double tol = kDefaultTol);

BiBoost beta(const Mat& p, double tol = kDefaultTol);

/// Identity-component membership: gᵀηg = η, det g = +1, and both diagonal
/// blocks have positive determinant. The η residual is measured relative to
/// max(1, max|g_ij|²). Throws InputError if g is not (m+n) x (m+n).
bool is_member(const Mat& g, Signature sig, double tol = kDefaultTol);

/// Exact block factorization: p = C, om = A·sqrt(I_m + pᵀp)⁻¹,
/// on = sqrt(I_n + ppᵀ)⁻¹·D. Throws ConsistencyError if om or on fail the
/// SO test at `tol`.
Factorization factor(const PseudoOrthElem& g, double tol = kDefaultTol);

/// ρ(om)·β(p)·λ(on) as a plain matrix.
Mat compose_factors(const Factorization& f, double tol = kDefaultTol);

struct BiBoostProduct {
  RightGyr right;
  Mat sum;
  LeftGyr left;
};

/// β(P1)β(P2) = ρ(rgyr[P1,P2]) β(P1 (+)_U P2) λ(lgyr[P1,P2]). Computes the
/// three factors and throws ConsistencyError if the identity residual
/// (relative to max(1, max|β(P1)β(P2)|)) exceeds `tol`.
BiBoostProduct biboost_product(const Mat& p1, const Mat& p2, double tol = kDefaultTol);

}  // namespace bigyro
