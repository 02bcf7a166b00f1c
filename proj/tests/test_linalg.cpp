#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "adaptfir/errors.hpp"
#include "adaptfir/linalg.hpp"
#include "oracles.hpp"

using adaptfir::Matrix;

TEST_CASE("dot, norm2 and mat_vec compute the usual values") {
  CHECK(adaptfir::dot({1.0, 2.0}, {3.0, 4.0}) == 11.0);
  CHECK(adaptfir::norm2({3.0, 4.0}) == 5.0);
  Matrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 2.0;
  a(1, 0) = 3.0;
  a(1, 1) = 4.0;
  CHECK(adaptfir::mat_vec(a, {1.0, 1.0}) == std::vector<double>{3.0, 7.0});
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(adaptfir::dot({1.0}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(adaptfir::mat_vec(Matrix(2, 2), {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(adaptfir::solve_linear(Matrix(2, 3), {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(adaptfir::solve_linear(Matrix(2, 2, 1.0), {1.0}), std::invalid_argument);
}

TEST_CASE("solve_linear solves identity and diagonal systems exactly") {
  CHECK(adaptfir::solve_linear(Matrix::identity(2), {1.0, 2.0}) ==
        std::vector<double>{1.0, 2.0});
  Matrix d(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 4.0;
  CHECK(adaptfir::solve_linear(d, {2.0, 4.0}) == std::vector<double>{1.0, 1.0});
}

TEST_CASE("solve_linear leaves a small residual on random systems") {
  oracles::TestRand rand(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    Matrix a(n, n);
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = rand.uniform();
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rand.uniform();
      a(i, i) += 3.0;  // keep the system comfortably nonsingular
    }
    const auto x = adaptfir::solve_linear(a, b);
    const auto ax = adaptfir::mat_vec(a, x);
    double r = 0.0, bn = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      r += (ax[i] - b[i]) * (ax[i] - b[i]);
      bn += b[i] * b[i];
    }
    CHECK(std::sqrt(r) <= 1e-9 * std::max(1.0, std::sqrt(bn)));
  }
}

TEST_CASE("solve_linear pivots rows when the diagonal is unusable") {
  Matrix a(2, 2);
  a(0, 0) = 0.0;
  a(0, 1) = 1.0;
  a(1, 0) = 1.0;
  a(1, 1) = 0.0;
  CHECK(adaptfir::solve_linear(a, {3.0, 4.0}) == std::vector<double>{4.0, 3.0});
}

TEST_CASE("solve_linear names the failing pivot on singular input") {
  Matrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 1.0;
  a(1, 0) = 1.0;
  a(1, 1) = 1.0;
  try {
    adaptfir::solve_linear(a, {1.0, 1.0});
    FAIL("expected SingularMatrixError");
  } catch (const adaptfir::SingularMatrixError& e) {
    CHECK(e.pivot_index() == 1);
  }
}

TEST_CASE("identity factory fills the diagonal") {
  const auto i3 = Matrix::identity(3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(i3(r, c) == (r == c ? 1.0 : 0.0));
  }
}
