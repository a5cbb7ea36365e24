#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bigyro {

inline constexpr double kDefaultTol = 1e-9;

/// Dense real matrix stored row-major. Values are immutable once built;
/// every operation below returns a fresh matrix.
class Mat {
 public:
  Mat() = default;

  /// Zero matrix of the given shape.
  Mat(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major `data`. Throws InputError if the length
  /// does not match or an entry is not finite.
  Mat(std::size_t rows, std::size_t cols, std::vector<double> data);

  /// Nested braces, one inner list per row: `Mat::from_rows({{1, 2}, {3, 4}})`.
  static Mat from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Mat identity(std::size_t n);
  static Mat zeros(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat diag(std::span<const double> values);
  static Mat diag(std::initializer_list<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  std::span<const double> data() const noexcept { return data_; }

  /// Largest absolute entry (0 for an empty matrix).
  double max_abs() const noexcept;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Mat vectors;                 // column j is the eigenvector for values[j]
};

Mat mul(const Mat& a, const Mat& b);
Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat scale(const Mat& a, double s);
Mat negate(const Mat& a);
Mat transpose(const Mat& a);

inline Mat operator*(const Mat& a, const Mat& b) { return mul(a, b); }
inline Mat operator+(const Mat& a, const Mat& b) { return add(a, b); }
inline Mat operator-(const Mat& a, const Mat& b) { return sub(a, b); }
inline Mat operator-(const Mat& a) { return negate(a); }
inline Mat operator*(double s, const Mat& a) { return scale(a, s); }

/// Copy of the `nrows` x `ncols` block starting at (`r0`, `c0`).
Mat block(const Mat& a, std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols);

/// Assembles [[tl, tr], [bl, br]]; block shapes must tile.
Mat assemble(const Mat& tl, const Mat& tr, const Mat& bl, const Mat& br);

/// Max |a_ij - b_ij|. Throws InputError on shape mismatch.
double max_abs_diff(const Mat& a, const Mat& b);

/// True iff max |a_ij - b_ij| <= tol. Throws InputError on shape mismatch.
bool approx_eq(const Mat& a, const Mat& b, double tol);

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. The input is
/// symmetrized before iterating; callers are expected to check symmetry.
SymmetricEigen symmetric_eigen(const Mat& s);

/// Unique symmetric positive-definite square root.
///
/// Rejects inputs that are not symmetric within `tol` (scaled by the
/// largest entry when that exceeds one) with InputError, and inputs whose
/// smallest eigenvalue falls below 1e3 * eps * largest eigenvalue with
/// DomainError.
Mat spd_sqrt(const Mat& s, double tol = kDefaultTol);

/// Gauss-Jordan inverse with partial pivoting. A pivot below
/// `tol * max|a_ij|` is treated as singular (DomainError).
Mat inverse(const Mat& a, double tol = kDefaultTol);

/// LU determinant with partial pivoting.
double determinant(const Mat& a);

/// max |aᵀa - I| <= tol and det(a) > 0.
bool is_special_orthogonal(const Mat& a, double tol = kDefaultTol);

}  // namespace bigyro
