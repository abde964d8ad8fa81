#pragma once

#include <cstddef>
#include <vector>

namespace ssvep {

// Minimal dense row-major matrix, just enough for the covariance algebra.
struct Matrix {
  std::size_t rows{0};
  std::size_t cols{0};
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns are eigenvectors
};

// Cyclic Jacobi rotations for a symmetric matrix; values sorted ascending.
EigenDecomposition jacobi_eigh(const Matrix& sym, double tol = 1e-14,
                               std::size_t max_sweeps = 64);

}  // namespace ssvep
