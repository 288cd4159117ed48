#pragma once

#include <vector>

#include "llspec/scaled.hpp"

// Chebyshev polynomials of the second kind, U_n.

namespace llspec {

/// U_n(x) by forward recurrence. Intermediate values are rescaled by powers
/// of two, so the result is exact at integer arguments and the only way to
/// get +-inf is a true double overflow of the final value.
double u_eval(int n, double x);

/// U_n(x) in extended range (mantissa * 2^exponent).
ScaledValue u_eval_scaled(int n, double x);

/// Trigonometric form sin((n+1)theta)/sin(theta) = U_n(cos theta). Kept as a
/// cross-check; singular where sin(theta) = 0.
double u_eval_trig(int n, double theta);

/// lim U_n(x)/U_{n+1}(x) = 1/(x + sqrt(x^2-1)) for |x| > 1, with the branch
/// of the square root that makes the result smaller than one in modulus.
/// Throws DomainError for |x| <= 1.
double u_ratio_limit(double x);

/// The n zeros cos(j*pi/(n+1)), j = 1..n, in increasing order.
std::vector<double> u_zeros(int n);

}  // namespace llspec
