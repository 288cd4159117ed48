#include "llspec/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "llspec/error.hpp"

namespace llspec {

namespace {

void validate(const TridiagonalMatrix& t) {
  if (t.diag.empty()) throw DomainError("tridiagonal matrix is empty");
  if (t.offdiag.size() + 1 != t.diag.size())
    throw DomainError("tridiagonal matrix: offdiag must have length n-1");
}

double pivot_floor(const TridiagonalMatrix& t) {
  double m = 1.0;
  for (double b : t.offdiag) m = std::max(m, b * b);
  return std::numeric_limits<double>::min() * m;
}

std::size_t count_below(const TridiagonalMatrix& t, double x, double pivmin) {
  std::size_t neg = 0;
  double d = t.diag[0] - x;
  if (std::fabs(d) < pivmin) d = -pivmin;
  if (d < 0) ++neg;
  for (std::size_t i = 1; i < t.diag.size(); ++i) {
    const double b = t.offdiag[i - 1];
    d = (t.diag[i] - x) - b * b / d;
    if (std::fabs(d) < pivmin) d = -pivmin;
    if (d < 0) ++neg;
  }
  return neg;
}

}  // namespace

std::size_t sturm_count(const TridiagonalMatrix& t, double x) {
  validate(t);
  return count_below(t, x, pivot_floor(t));
}

std::pair<double, double> gershgorin_bounds(const TridiagonalMatrix& t) {
  validate(t);
  const std::size_t n = t.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(t.offdiag[i - 1]);
    if (i + 1 < n) r += std::fabs(t.offdiag[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  // Widen a little so the end points are strict bounds after rounding.
  const double pad = 4.0 * std::numeric_limits<double>::epsilon() *
                         std::max({std::fabs(lo), std::fabs(hi), 1.0}) * static_cast<double>(n);
  return {lo - pad, hi + pad};
}

namespace {

double bisect_index(const TridiagonalMatrix& t, std::size_t index, double lo, double hi,
                    double tol, double pivmin) {
  // Invariant: count(lo) <= index < count(hi).
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(t, mid, pivmin) <= index)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double tridiag_eig(const TridiagonalMatrix& t, std::size_t index, double tol) {
  validate(t);
  if (!(tol > 0)) throw DomainError("tridiag_eig: tol must be positive");
  if (index >= t.size()) throw DomainError("tridiag_eig: index out of range");
  const auto [lo, hi] = gershgorin_bounds(t);
  return bisect_index(t, index, lo, hi, tol, pivot_floor(t));
}

std::vector<double> tridiag_eigs(const TridiagonalMatrix& t, double tol) {
  validate(t);
  if (!(tol > 0)) throw DomainError("tridiag_eigs: tol must be positive");
  const std::size_t n = t.size();
  if (n == 1) return {t.diag[0]};
  const double pivmin = pivot_floor(t);
  const auto [lo, hi] = gershgorin_bounds(t);
  std::vector<double> eig(n);
  double left = lo;
  for (std::size_t i = 0; i < n; ++i) {
    // Eigenvalue i lies above every earlier one, so the search window only
    // shrinks from the left.
    const double start = (i > 0 && count_below(t, eig[i - 1] - tol, pivmin) <= i)
                             ? std::max(left, eig[i - 1] - tol)
                             : left;
    eig[i] = bisect_index(t, i, start, hi, tol, pivmin);
    left = start;
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace llspec
