#pragma once

#include <cstddef>
#include <cstdint>

#include "bigyro/matcore.hpp"
#include "bigyro/report.hpp"

namespace bigyro {

/// Signature (m, n) of the parameter space R^{n x m} plus the working tolerance.
class BgParams {
 public:
  /// Throws InputError unless m >= 1, n >= 1 and tol > 0.
  BgParams(std::size_t m, std::size_t n, double tol = kDefaultTol);

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  double tol() const noexcept { return tol_; }

 private:
  std::size_t m_;
  std::size_t n_;
  double tol_;
};

/// n x n rotation acting on parameters from the left.
struct LeftGyr {
  Mat matrix;
};

/// m x m rotation acting on parameters from the right.
struct RightGyr {
  Mat matrix;
};

/// P1 (+)_U P2 = P1 sqrt(I_m + P2ᵀP2) + sqrt(I_n + P1P1ᵀ) P2.
Mat bg_add(const Mat& p1, const Mat& p2, const BgParams& params);

/// sqrt(I_n + P12 P12ᵀ)⁻¹ (P1 P2ᵀ + sqrt(I_n + P1P1ᵀ) sqrt(I_n + P2P2ᵀ)), P12 = P1 (+)_U P2.
LeftGyr left_gyr(const Mat& p1, const Mat& p2, const BgParams& params);

/// (P1ᵀP2 + sqrt(I_m + P1ᵀP1) sqrt(I_m + P2ᵀP2)) sqrt(I_m + P12ᵀP12)⁻¹.
RightGyr right_gyr(const Mat& p1, const Mat& p2, const BgParams& params);

/// L·P
Mat apply_lgyr(const LeftGyr& l, const Mat& p);
/// P·R
Mat apply_rgyr(const RightGyr& r, const Mat& p);

/// Gyrations are orthogonal, so the inverse is the transpose.
inline LeftGyr inverse(const LeftGyr& l) { return {transpose(l.matrix)}; }
inline RightGyr inverse(const RightGyr& r) { return {transpose(r.matrix)}; }

/// The bi-gyrogroup operation P1 (+)'_U P2 = (P1 (+)_U P2) · rgyr[P2, P1].
Mat bg_group_add(const Mat& p1, const Mat& p2, const BgParams& params);

/// gyr[a, b] = lgyr[a, b] ∘ rgyr[b, a], acting as x -> L·x·R.
struct Gyrator {
  LeftGyr left;
  RightGyr right;

  Mat apply(const Mat& x) const { return mul(mul(left.matrix, x), right.matrix); }
};

Gyrator gyrator(const Mat& p1, const Mat& p2, const BgParams& params);

/// Samples `trials` random tuples (entries uniform in [-2, 2], per-trial
/// streams derived from `seed`) and evaluates every bi-gyrogroupoid,
/// bi-gyrogroup and gyrogroup law on (R^{n x m}, (+)_U) and (+)'_U.
/// Residuals are max absolute entry differences, compared against params.tol().
/// Throws InputError when trials == 0.
Report check_axioms(const BgParams& params, std::size_t trials, std::uint64_t seed);

}  // namespace bigyro
