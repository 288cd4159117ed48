#pragma once

#include <vector>

#include "llspec/scaled.hpp"

// The polynomial family G_k(lambda, mu), H_k = G_{k-1}, in its three
// realizations: Chebyshev closed form, companion-matrix recursion, and monic
// orthogonal polynomials of the Jacobi matrix J*(mu).
//
// Internally everything is normalized by powers of two:
//   g_k = G_k / 2^k = U_k(s) + mu U_{k-1}(s),   s = (-lambda - mu)/4,
//   h_k = H_k / 2^{k-1} = g_{k-1}.

namespace llspec {

struct GHValue {
  int k = 0;
  double lambda = 0.0;
  double mu = 0.0;
  double g_normalized = 0.0;
  double h_normalized = 0.0;
};

/// Normalized g_k by the Chebyshev closed form. k >= 0 (g_0 = 1).
double g_value(int k, double lambda, double mu);

/// Same quantity by iterating the 2x2 companion step from (G_1, H_1) =
/// (mu - lambda, 1), rescaling by 1/2 each step. Independent of u_eval.
double g_value_recursive(int k, double lambda, double mu);

/// Both normalized values at once.
GHValue gh_value(int k, double lambda, double mu);

/// Unnormalized G_k in sign/log form (2^k folded into the log).
SignedLog g_log(int k, double lambda, double mu);

/// sin((k+1)t) + mu sin(kt), which equals sin(t) g_k(-mu - 4cos t, mu).
/// Throws DomainError unless 0 < t < pi.
double angular_form(int k, double t, double mu);

/// Monic orthogonal polynomial P_{k,mu}(z) of J*(mu); G_k(lambda, mu) =
/// 2^k P_{k,mu}(-lambda/2).
double monic_op_value(int k, double z, double mu);

/// The k zeros of G_k(., mu) in increasing order, from the eigenvalues of
/// the k x k truncation of J*(mu) mapped through lambda = -2x.
std::vector<double> g_zeros(int k, double mu, double tol = 1e-14);

/// Largest zero of G_k(., mu) only.
double g_largest_zero(int k, double mu, double tol = 1e-14);

}  // namespace llspec
