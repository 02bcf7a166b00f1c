#include "adaptfir/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "adaptfir/errors.hpp"

namespace adaptfir {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(const std::vector<double>& a) {
  return std::sqrt(dot(a, a));
}

std::vector<double> mat_vec(const Matrix& a, const std::vector<double>& x) {
  if (a.cols != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<double> y(a.rows, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
  if (a.rows != a.cols) throw std::invalid_argument("solve_linear: matrix must be square");
  if (b.size() != a.rows) throw std::invalid_argument("solve_linear: dimension mismatch");
  const std::size_t n = a.rows;

  double scale = 0.0;
  for (double v : a.data) scale = std::max(scale, std::abs(v));
  const double threshold = 1e-12 * scale;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(a(r, col));
      if (mag > best) {
        best = mag;
        pivot_row = r;
      }
    }
    if (best == 0.0 || best < threshold) throw SingularMatrixError(col, best);
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot_row, j));
      std::swap(b[col], b[pivot_row]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / a(col, col);
      if (factor == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
      b[r] -= factor * b[col];
    }
  }

  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return x;
}

}  // namespace adaptfir
