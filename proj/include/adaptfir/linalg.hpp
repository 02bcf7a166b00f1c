#pragma once

#include <cstddef>
#include <vector>

namespace adaptfir {

// Dense row-major matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static Matrix identity(std::size_t n);
};

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);
std::vector<double> mat_vec(const Matrix& a, const std::vector<double>& x);

// Solves a x = b by Gaussian elimination with partial pivoting. Throws
// SingularMatrixError naming the pivot column when the best available pivot
// falls below 1e-12 times the largest magnitude in a.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

}  // namespace adaptfir
