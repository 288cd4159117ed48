#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace llspec {

/// Finite real symmetric tridiagonal matrix.
struct TridiagonalMatrix {
  std::vector<double> diag;     // length n
  std::vector<double> offdiag;  // length n-1

  std::size_t size() const { return diag.size(); }
};

/// Number of eigenvalues strictly less than x, from the signs of the
/// leading-principal-minor ratio recurrence.
std::size_t sturm_count(const TridiagonalMatrix& t, double x);

/// Interval [lo, hi] containing every eigenvalue (Gershgorin discs).
std::pair<double, double> gershgorin_bounds(const TridiagonalMatrix& t);

/// All eigenvalues in increasing order to absolute accuracy `tol`, by
/// bisection on sturm_count. Deterministic for fixed input.
std::vector<double> tridiag_eigs(const TridiagonalMatrix& t, double tol = 1e-13);

/// Eigenvalue number `index` (0-based, increasing order) alone.
double tridiag_eig(const TridiagonalMatrix& t, std::size_t index, double tol = 1e-13);

}  // namespace llspec
