#include "llspec/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "llspec/error.hpp"

namespace llspec {

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data) s += v * v;
  return std::sqrt(s);
}

bool DenseMatrix::is_symmetric(double tol) const {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::fabs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

SignedLog lu_log_determinant(DenseMatrix a) {
  const std::size_t n = a.n;
  SignedLog det{1, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::fabs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(a(i, k)) > best) {
        best = std::fabs(a(i, k));
        piv = i;
      }
    }
    if (best == 0.0) return {};
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det.sign = -det.sign;
    }
    const double p = a(k, k);
    det *= SignedLog::from(p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / p;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

namespace {

double off_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Zero a(p,q) by a rotation in the (p,q) plane, applied on both sides.
void rotate(DenseMatrix& a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
  for (std::size_t r = 0; r < a.n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    const double np = arp - s * (arq + tau * arp);
    const double nq = arq + s * (arp - tau * arq);
    a(r, p) = a(p, r) = np;
    a(r, q) = a(q, r) = nq;
  }
}

}  // namespace

std::vector<double> jacobi_eigenvalues(DenseMatrix a, const JacobiOptions& opts) {
  const std::size_t n = a.n;
  const double scale = a.frobenius_norm();
  const double target = opts.rel_tol * (scale > 0 ? scale : 1.0);
  double off = off_norm(a);
  int sweep = 0;
  while (off > target) {
    if (sweep >= opts.max_sweeps)
      throw ConvergenceError("jacobi_eigenvalues: no convergence after " +
                                 std::to_string(opts.max_sweeps) + " sweeps",
                             off);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    off = off_norm(a);
    ++sweep;
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace llspec
