#include "bigyro/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "bigyro/errors.hpp"

namespace bigyro {

namespace {

std::string shape(const Mat& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const Mat& a, const Mat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError(std::string(what) + ": shape mismatch " + shape(a) + " vs " + shape(b));
  }
}

void require_square(const Mat& a, const char* what) {
  if (!a.is_square()) throw InputError(std::string(what) + ": expected a square matrix, got " + shape(a));
}

// Scratch buffer with mutable element access for the in-place algorithms.
struct Work {
  std::size_t n;
  std::vector<double> v;
  explicit Work(const Mat& a) : n(a.cols()), v(a.data().begin(), a.data().end()) {}
  Work(std::size_t rows, std::size_t cols) : n(cols), v(rows * cols, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) { return v[r * n + c]; }
};

}  // namespace

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw InputError("Mat: data length " + std::to_string(data_.size()) + " does not match " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (double x : data_) {
    if (!std::isfinite(x)) throw InputError("Mat: non-finite entry");
  }
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<double> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("Mat::from_rows: ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Mat(r, c, std::move(data));
}

Mat Mat::identity(std::size_t n) {
  std::vector<double> data(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) data[i * n + i] = 1.0;
  return Mat(n, n, std::move(data));
}

Mat Mat::diag(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<double> data(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) data[i * n + i] = values[i];
  return Mat(n, n, std::move(data));
}

Mat Mat::diag(std::initializer_list<double> values) {
  return diag(std::span<const double>(values.begin(), values.size()));
}

double Mat::max_abs() const noexcept {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) {
    throw InputError("mul: inner dimensions differ (" + shape(a) + " * " + shape(b) + ")");
  }
  std::vector<double> out(a.rows() * b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out[i * b.cols() + j] += aik * b(k, j);
    }
  }
  return Mat(a.rows(), b.cols(), std::move(out));
}

Mat add(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "add");
  std::vector<double> out(a.data().begin(), a.data().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.data()[i];
  return Mat(a.rows(), a.cols(), std::move(out));
}

Mat sub(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "sub");
  std::vector<double> out(a.data().begin(), a.data().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.data()[i];
  return Mat(a.rows(), a.cols(), std::move(out));
}

Mat scale(const Mat& a, double s) {
  std::vector<double> out(a.data().begin(), a.data().end());
  for (double& x : out) x *= s;
  return Mat(a.rows(), a.cols(), std::move(out));
}

Mat negate(const Mat& a) { return scale(a, -1.0); }

Mat transpose(const Mat& a) {
  std::vector<double> out(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[j * a.rows() + i] = a(i, j);
  return Mat(a.cols(), a.rows(), std::move(out));
}

Mat block(const Mat& a, std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) {
  if (r0 + nrows > a.rows() || c0 + ncols > a.cols()) {
    throw InputError("block: requested block exceeds " + shape(a));
  }
  std::vector<double> out;
  out.reserve(nrows * ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out.push_back(a(r0 + i, c0 + j));
  return Mat(nrows, ncols, std::move(out));
}

Mat assemble(const Mat& tl, const Mat& tr, const Mat& bl, const Mat& br) {
  if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() ||
      tr.cols() != br.cols()) {
    throw InputError("assemble: blocks do not tile");
  }
  const std::size_t rows = tl.rows() + bl.rows();
  const std::size_t cols = tl.cols() + tr.cols();
  Work w(rows, cols);
  auto put = [&](const Mat& b, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) w(r0 + i, c0 + j) = b(i, j);
  };
  put(tl, 0, 0);
  put(tr, 0, tl.cols());
  put(bl, tl.rows(), 0);
  put(br, tl.rows(), tl.cols());
  return Mat(rows, cols, std::move(w.v));
}

double max_abs_diff(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

bool approx_eq(const Mat& a, const Mat& b, double tol) { return max_abs_diff(a, b) <= tol; }

SymmetricEigen symmetric_eigen(const Mat& s) {
  require_square(s, "symmetric_eigen");
  const std::size_t n = s.rows();
  Work a(s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
  Work v(Mat::identity(n));

  double frob = 0.0;
  for (double x : a.v) frob += x * x;
  const double stop = std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon() * frob;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off <= stop) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  SymmetricEigen out;
  out.values.reserve(n);
  Work vs(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values.push_back(a(order[j], order[j]));
    for (std::size_t k = 0; k < n; ++k) vs(k, j) = v(k, order[j]);
  }
  out.vectors = Mat(n, n, std::move(vs.v));
  return out;
}

Mat spd_sqrt(const Mat& s, double tol) {
  require_square(s, "spd_sqrt");
  const std::size_t n = s.rows();
  const double sym_tol = tol * std::max(1.0, s.max_abs());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(s(i, j) - s(j, i)) > sym_tol) throw InputError("spd_sqrt: matrix is not symmetric");

  const SymmetricEigen eig = symmetric_eigen(s);
  const double lmax = n == 0 ? 0.0 : eig.values.back();
  const double floor = 1e3 * std::numeric_limits<double>::epsilon() * lmax;
  if (n > 0 && (lmax <= 0.0 || eig.values.front() < floor)) {
    throw DomainError("spd_sqrt: matrix is not positive definite (min eigenvalue " +
                      std::to_string(eig.values.front()) + ")");
  }

  Work r(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double root = std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const double vik = eig.vectors(i, k) * root;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += vik * eig.vectors(j, k);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) r(i, j) = r(j, i) = 0.5 * (r(i, j) + r(j, i));
  return Mat(n, n, std::move(r.v));
}

Mat inverse(const Mat& a, double tol) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  Work w(a);
  Work inv(Mat::identity(n));
  const double threshold = tol * std::max(a.max_abs(), std::numeric_limits<double>::min());

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(w(r, col)) > std::abs(w(piv, col))) piv = r;
    if (std::abs(w(piv, col)) <= threshold) throw DomainError("inverse: matrix is singular within tolerance");
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(w(piv, k), w(col, k));
        std::swap(inv(piv, k), inv(col, k));
      }
    }
    const double d = w(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      w(col, k) /= d;
      inv(col, k) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = w(r, col);
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        w(r, k) -= f * w(col, k);
        inv(r, k) -= f * inv(col, k);
      }
    }
  }
  return Mat(n, n, std::move(inv.v));
}

double determinant(const Mat& a) {
  require_square(a, "determinant");
  const std::size_t n = a.rows();
  Work w(a);
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(w(r, col)) > std::abs(w(piv, col))) piv = r;
    if (w(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(w(piv, k), w(col, k));
      det = -det;
    }
    det *= w(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = w(r, col) / w(col, col);
      for (std::size_t k = col; k < n; ++k) w(r, k) -= f * w(col, k);
    }
  }
  return det;
}

bool is_special_orthogonal(const Mat& a, double tol) {
  if (!a.is_square()) return false;
  return approx_eq(mul(transpose(a), a), Mat::identity(a.rows()), tol) && determinant(a) > 0.0;
}

}  // namespace bigyro
