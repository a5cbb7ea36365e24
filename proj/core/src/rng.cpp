#include "bigyro/rng.hpp"

#include <cmath>

namespace bigyro {

Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> data(rows * cols);
  for (double& x : data) x = dist(rng);
  return Mat(rows, cols, std::move(data));
}

Mat random_rotation(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  // Columns stored contiguously while orthonormalizing.
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (;;) {
      for (double& x : q[j]) x = gauss(rng);
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < j; ++k) {
          double dot = 0.0;
          for (std::size_t i = 0; i < n; ++i) dot += q[j][i] * q[k][i];
          for (std::size_t i = 0; i < n; ++i) q[j][i] -= dot * q[k][i];
        }
      }
      double norm = 0.0;
      for (double x : q[j]) norm += x * x;
      norm = std::sqrt(norm);
      if (norm < 1e-6) continue;
      for (double& x : q[j]) x /= norm;
      break;
    }
  }
  std::vector<double> data(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) data[i * n + j] = q[j][i];
  Mat out(n, n, std::move(data));
  if (n > 0 && determinant(out) < 0.0) {
    std::vector<double> flipped(out.data().begin(), out.data().end());
    for (std::size_t i = 0; i < n; ++i) flipped[i * n + n - 1] = -flipped[i * n + n - 1];
    out = Mat(n, n, std::move(flipped));
  }
  return out;
}

}  // namespace bigyro
