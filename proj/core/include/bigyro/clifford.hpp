#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bigyro/matcore.hpp"
#include "bigyro/pseudo_orth.hpp"
#include "bigyro/report.hpp"

namespace bigyro {

/// Cl(m, n): basis vectors e_1..e_{m+n} with e_i² = +1 for the first m and
/// -1 for the remaining n. Blade e_{i1}...e_{ik} (i1 < ... < ik) is the
/// bitmask with bits i1-1, ..., ik-1 set.
class CliffordAlgebra {
 public:
  static constexpr std::size_t kMaxDim = 10;

  /// Throws InputError unless 1 <= m + n <= kMaxDim.
  CliffordAlgebra(std::size_t m, std::size_t n);

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return m_ + n_; }
  std::size_t blades() const noexcept { return std::size_t{1} << dim(); }
  double metric(std::size_t i) const noexcept { return i < m_ ? 1.0 : -1.0; }

  /// Sign s with blade(a)·blade(b) = s·blade(a ^ b).
  double blade_sign(std::uint32_t a, std::uint32_t b) const noexcept;

  /// Q(v) = Σ metric(i) v_i²
  double quadratic(std::span<const double> v) const;
  /// B(u, v) = Σ metric(i) u_i v_i
  double bilinear(std::span<const double> u, std::span<const double> v) const;

  friend bool operator==(const CliffordAlgebra&, const CliffordAlgebra&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
};

class Multivector {
 public:
  /// Zero element.
  explicit Multivector(CliffordAlgebra alg);
  /// Dense coefficients, one per blade. Throws InputError on a length mismatch
  /// or a non-finite entry.
  Multivector(CliffordAlgebra alg, std::vector<double> coeffs);

  static Multivector scalar(CliffordAlgebra alg, double s);
  static Multivector blade(CliffordAlgebra alg, std::uint32_t mask, double coeff = 1.0);
  /// e_{i+1}
  static Multivector basis_vector(CliffordAlgebra alg, std::size_t i);
  /// Σ v_i e_{i+1}; v must have m + n entries.
  static Multivector vector(CliffordAlgebra alg, std::span<const double> v);

  const CliffordAlgebra& algebra() const noexcept { return alg_; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](std::uint32_t mask) const { return coeffs_.at(mask); }

  /// Grade-1 coefficients.
  std::vector<double> vector_part() const;
  /// Largest coefficient magnitude outside grade `g`.
  double off_grade(std::size_t g) const;
  double max_abs() const noexcept;

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  CliffordAlgebra alg_;
  std::vector<double> coeffs_;
};

/// Geometric product. Throws InputError if the algebras differ.
Multivector gp(const Multivector& a, const Multivector& b);
Multivector add(const Multivector& a, const Multivector& b);
Multivector sub(const Multivector& a, const Multivector& b);
Multivector scale(const Multivector& a, double s);

inline Multivector operator*(const Multivector& a, const Multivector& b) { return gp(a, b); }
inline Multivector operator+(const Multivector& a, const Multivector& b) { return add(a, b); }
inline Multivector operator-(const Multivector& a, const Multivector& b) { return sub(a, b); }
inline Multivector operator-(const Multivector& a) { return scale(a, -1.0); }
inline Multivector operator*(double s, const Multivector& a) { return scale(a, s); }

/// Max coefficient difference. Throws InputError if the algebras differ.
double max_abs_diff(const Multivector& a, const Multivector& b);

/// Negates odd-grade blades.
Multivector grade_involution(const Multivector& a);

/// Two-sided inverse, from the left-multiplication matrix. Throws DomainError
/// if `a` is not invertible.
Multivector inverse(const Multivector& a, double tol = kDefaultTol);

/// T_g(v) = ĝ v g⁻¹ as an (m+n) x (m+n) matrix; column j is T_g(e_{j+1}).
/// Throws DomainError if g is not invertible and NotInCliffordGroup if some
/// image has a non-vector part above tol · max(1, |image|).
Mat twisted_adjoint(const Multivector& g, double tol = kDefaultTol);

/// An even product of vectors with Q(v_i) = ±1.
struct SpinElem {
  std::vector<Multivector> factors;
  Multivector product;
};

/// Normalizes each vector by sqrt|Q(v)| and multiplies them in order.
/// Throws InputError for an odd count, a non-vector input, or mixed
/// algebras, and DomainError for a null vector (|Q(v)| <= tol · max(1, |v|²)).
/// An empty list gives the identity of `alg`.
SpinElem make_spin(const CliffordAlgebra& alg, const std::vector<Multivector>& vectors, double tol = kDefaultTol);

/// Reflection factorization of g ∈ SO(m, n) into an even product of unit
/// vectors whose twisted adjoint reproduces g. Throws LiftFailure if a pivot
/// is numerically null, the reflection count is odd, or the reconstruction
/// misses g by more than tol · max(1, max|g|)².
SpinElem lift_to_spin(const PseudoOrthElem& g, double tol = kDefaultTol);

/// Samples spin lifts of random bi-boosts and checks: lift round trip,
/// homomorphism of the twisted adjoint, sign-only ambiguity of lifts, the
/// transported bi-boost factorization, the coset-level product
/// s(rgyr)·s(P1 ⊕ P2)·s(lgyr) = ±g1·g2, preservation of Q, the kernel ±1,
/// the anticommutator identity, and the lift success rate (>= 99%, reported as
/// the failure fraction). Residuals are relative to max(1, max|entry|).
/// Throws InputError unless m, n >= 1, m + n <= 4 and trials >= 1.
Report verify_spin_decomposition(std::size_t m, std::size_t n, std::size_t trials, std::uint64_t seed,
                                 double tol = 1e-7);

}  // namespace bigyro
