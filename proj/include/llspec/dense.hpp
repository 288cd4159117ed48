#pragma once

#include <cstddef>
#include <vector>

#include "llspec/scaled.hpp"

namespace llspec {

/// Row-major square matrix.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : n(dim), data(dim * dim, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }

  double frobenius_norm() const;
  bool is_symmetric(double tol = 0.0) const;
};

/// det(A) via LU with partial pivoting, accumulated as sign and log|.|.
SignedLog lu_log_determinant(DenseMatrix a);

struct JacobiOptions {
  int max_sweeps = 50;
  double rel_tol = 1e-12;  // off-diagonal Frobenius norm relative to ||A||_F
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// Throws ConvergenceError (carrying the off-diagonal residual) when the
/// sweep limit is hit.
std::vector<double> jacobi_eigenvalues(DenseMatrix a, const JacobiOptions& opts = {});

}  // namespace llspec
