#pragma once

#include <cstdint>
#include <vector>

#include "llspec/dense.hpp"
#include "llspec/scaled.hpp"

// Level-n matrices of the lamplighter generators acting on the 2^n vertices
// of level n of the binary tree, and the pencil M_n(mu) = a + a^-1 + b +
// b^-1 - mu c.

namespace llspec {

/// Maximum level; LLSPEC_NMAX overrides the default of 12.
int default_max_level();

/// Permutation matrices stored as images: row i has its single 1 in column
/// a[i] (likewise b, c).
struct LevelRep {
  int level = 0;
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;
  std::vector<std::uint32_t> c;

  std::size_t dim() const { return a.size(); }
};

/// Expands a permutation into its 0/1 matrix.
DenseMatrix permutation_matrix(const std::vector<std::uint32_t>& perm);

/// a_n = [[0, a_{n-1}], [b_{n-1}, 0]], b_n = [[a_{n-1}, 0], [0, b_{n-1}]],
/// c_n = [[0, I], [I, 0]], from a_0 = b_0 = c_0 = [1].
/// Throws CapacityError when n > max_level.
LevelRep build_level(int n, int max_level = default_max_level());

struct PencilMatrix {
  int level = 0;
  double mu = 0.0;
  DenseMatrix entries;
};

PencilMatrix pencil_matrix(const LevelRep& rep, double mu);

/// Phi_n(lambda, mu) = det(M_n(mu) - lambda I) by LU.
SignedLog phi_det(int n, double lambda, double mu, int max_level = default_max_level());

/// Phi_n from the product (4 - lambda - mu) prod_{k<n} G_k^{2^{n-1-k}} * G_n.
SignedLog phi_factorized(int n, double lambda, double mu);

/// Exponent of G_k in the factorization of Phi_n (0 when k > n).
double g_exponent_in_phi(int n, int k);

/// All 2^n eigenvalues of M_n(mu), ascending, by cyclic Jacobi.
std::vector<double> dense_eigs(const PencilMatrix& m, const JacobiOptions& opts = {});

}  // namespace llspec
