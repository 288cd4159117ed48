#include "llspec/gh_polys.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "llspec/chebyshev.hpp"
#include "llspec/error.hpp"
#include "llspec/jacobi_spectral.hpp"
#include "llspec/tridiagonal.hpp"

namespace llspec {

namespace {

// a*2^ea + b*2^eb as a ScaledValue.
ScaledValue scaled_add(double a, long ea, double b, long eb) {
  if (a == 0.0) return {b, eb};
  if (b == 0.0) return {a, ea};
  const long e = std::max(ea, eb);
  const double sum = std::ldexp(a, static_cast<int>(std::max(ea - e, -2000L))) +
                     std::ldexp(b, static_cast<int>(std::max(eb - e, -2000L)));
  if (sum == 0.0) return {0.0, 0};
  int ex = 0;
  const double m = std::frexp(sum, &ex);
  return {m, e + ex};
}

ScaledValue g_scaled(int k, double lambda, double mu) {
  if (k < 0) throw DomainError("g_value: negative index");
  if (k == 0) return {1.0, 0};
  const double s = (-lambda - mu) / 4.0;
  const ScaledValue uk = u_eval_scaled(k, s);
  const ScaledValue ukm1 = u_eval_scaled(k - 1, s);
  return scaled_add(uk.mantissa, uk.exponent, mu * ukm1.mantissa, ukm1.exponent);
}

}  // namespace

double g_value(int k, double lambda, double mu) {
  const ScaledValue v = g_scaled(k, lambda, mu);
  if (v.exponent > std::numeric_limits<double>::max_exponent)
    return v.mantissa > 0 ? HUGE_VAL : -HUGE_VAL;
  return v.value();
}

double g_value_recursive(int k, double lambda, double mu) {
  if (k < 0) throw DomainError("g_value_recursive: negative index");
  if (k == 0) return 1.0;
  // (g_j, h_j) -> (g_{j+1}, h_{j+1}) is the companion step
  //   [ -lambda-mu  -4 ] scaled by 1/2^{j+1} on G and 1/2^j on H.
  //   [     1        0 ]
  double g = (mu - lambda) / 2.0;
  double h = 1.0;
  const double c = (-lambda - mu) / 2.0;
  for (int j = 1; j < k; ++j) {
    const double g_next = c * g - h;
    h = g;
    g = g_next;
  }
  return g;
}

GHValue gh_value(int k, double lambda, double mu) {
  if (k < 1) throw DomainError("gh_value: k must be positive");
  return {k, lambda, mu, g_value(k, lambda, mu), g_value(k - 1, lambda, mu)};
}

SignedLog g_log(int k, double lambda, double mu) {
  const ScaledValue v = g_scaled(k, lambda, mu);
  if (v.mantissa == 0.0) return {};
  return {v.sign(), v.log_abs() + k * std::numbers::ln2};
}

double angular_form(int k, double t, double mu) {
  if (k < 0) throw DomainError("angular_form: negative index");
  if (!(t > 0.0 && t < std::numbers::pi)) throw DomainError("angular_form: t must lie in (0, pi)");
  return std::sin((k + 1) * t) + mu * std::sin(k * t);
}

double monic_op_value(int k, double z, double mu) {
  if (k < 0) throw DomainError("monic_op_value: negative degree");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = z + mu / 2.0;
  for (int j = 1; j < k; ++j) {
    const double next = (z - mu / 2.0) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> g_zeros(int k, double mu, double tol) {
  if (k < 1) throw DomainError("g_zeros: k must be positive");
  std::vector<double> x = tridiag_eigs(jstar_truncation(mu, k), tol / 2.0);
  std::vector<double> lambda(x.size());
  std::transform(x.rbegin(), x.rend(), lambda.begin(), [](double v) { return -2.0 * v; });
  return lambda;
}

double g_largest_zero(int k, double mu, double tol) {
  if (k < 1) throw DomainError("g_largest_zero: k must be positive");
  return -2.0 * tridiag_eig(jstar_truncation(mu, k), 0, tol / 2.0);
}

}  // namespace llspec
