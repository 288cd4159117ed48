#include "llspec/lamplighter_rep.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "llspec/error.hpp"
#include "llspec/gh_polys.hpp"

namespace llspec {

int default_max_level() {
  if (const char* env = std::getenv("LLSPEC_NMAX")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 20) return static_cast<int>(v);
  }
  return 12;
}

DenseMatrix permutation_matrix(const std::vector<std::uint32_t>& perm) {
  DenseMatrix m(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(i, perm[i]) = 1.0;
  return m;
}

LevelRep build_level(int n, int max_level) {
  if (n < 0) throw DomainError("build_level: negative level");
  if (n > max_level)
    throw CapacityError("build_level: level " + std::to_string(n) + " exceeds maximum " +
                        std::to_string(max_level));
  LevelRep rep;
  rep.a = {0};
  rep.b = {0};
  rep.c = {0};
  for (int lvl = 1; lvl <= n; ++lvl) {
    const auto half = static_cast<std::uint32_t>(rep.a.size());
    std::vector<std::uint32_t> a(2 * half), b(2 * half), c(2 * half);
    for (std::uint32_t i = 0; i < half; ++i) {
      a[i] = half + rep.a[i];
      a[half + i] = rep.b[i];
      b[i] = rep.a[i];
      b[half + i] = half + rep.b[i];
      c[i] = half + i;
      c[half + i] = i;
    }
    rep.a = std::move(a);
    rep.b = std::move(b);
    rep.c = std::move(c);
  }
  rep.level = n;
  return rep;
}

PencilMatrix pencil_matrix(const LevelRep& rep, double mu) {
  const std::size_t dim = rep.dim();
  PencilMatrix m{rep.level, mu, DenseMatrix(dim)};
  // Inverses of permutation matrices are their transposes.
  for (std::size_t i = 0; i < dim; ++i) {
    m.entries(i, rep.a[i]) += 1.0;
    m.entries(rep.a[i], i) += 1.0;
    m.entries(i, rep.b[i]) += 1.0;
    m.entries(rep.b[i], i) += 1.0;
    m.entries(i, rep.c[i]) -= mu;
  }
  return m;
}

SignedLog phi_det(int n, double lambda, double mu, int max_level) {
  PencilMatrix m = pencil_matrix(build_level(n, max_level), mu);
  for (std::size_t i = 0; i < m.entries.n; ++i) m.entries(i, i) -= lambda;
  return lu_log_determinant(std::move(m.entries));
}

double g_exponent_in_phi(int n, int k) {
  if (k < 1 || k > n) return 0.0;
  if (k == n) return 1.0;
  return std::ldexp(1.0, n - 1 - k);
}

SignedLog phi_factorized(int n, double lambda, double mu) {
  if (n < 0) throw DomainError("phi_factorized: negative level");
  SignedLog result = SignedLog::from(4.0 - lambda - mu);
  for (int k = 1; k <= n; ++k) result *= g_log(k, lambda, mu).pow(g_exponent_in_phi(n, k));
  return result;
}

std::vector<double> dense_eigs(const PencilMatrix& m, const JacobiOptions& opts) {
  if (!m.entries.is_symmetric(1e-14)) throw DomainError("dense_eigs: matrix is not symmetric");
  return jacobi_eigenvalues(m.entries, opts);
}

}  // namespace llspec
