#include "llspec/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "llspec/error.hpp"

namespace llspec {

namespace {

constexpr int kRescaleExp = 512;

}  // namespace

ScaledValue u_eval_scaled(int n, double x) {
  if (n < 0) throw DomainError("u_eval: negative degree");
  if (n == 0) return {1.0, 0};
  // (prev, cur) share the binary exponent `e`.
  double prev = 1.0;
  double cur = 2.0 * x;
  long e = 0;
  const double big = std::ldexp(1.0, kRescaleExp);
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
    if (std::fabs(cur) > big || std::fabs(prev) > big) {
      cur = std::ldexp(cur, -kRescaleExp);
      prev = std::ldexp(prev, -kRescaleExp);
      e += kRescaleExp;
    }
  }
  if (cur == 0.0) return {0.0, 0};
  int ex = 0;
  const double m = std::frexp(cur, &ex);
  return {m, e + ex};
}

double u_eval(int n, double x) {
  const ScaledValue s = u_eval_scaled(n, x);
  if (s.exponent > std::numeric_limits<double>::max_exponent)
    return s.mantissa > 0 ? HUGE_VAL : -HUGE_VAL;
  return s.value();
}

double u_eval_trig(int n, double theta) {
  if (n < 0) throw DomainError("u_eval_trig: negative degree");
  const double s = std::sin(theta);
  // sin(pi) rounds to ~1e-16, not 0.
  if (std::fabs(s) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(theta)))
    throw DomainError("u_eval_trig: sin(theta) = 0");
  return std::sin((n + 1) * theta) / s;
}

double u_ratio_limit(double x) {
  if (!(std::fabs(x) > 1.0)) throw DomainError("u_ratio_limit: requires |x| > 1");
  // x + sqrt(x^2-1) continued analytically: for x < -1 the root is negative,
  // so the sum is x - sqrt(x^2-1) and |result| < 1 on both sides.
  const double r = std::sqrt((std::fabs(x) - 1.0) * (std::fabs(x) + 1.0));
  return 1.0 / (x + std::copysign(r, x));
}

std::vector<double> u_zeros(int n) {
  if (n < 1) throw DomainError("u_zeros: degree must be positive");
  std::vector<double> z(n);
  // j = n..1 gives increasing cosines.
  for (int i = 0; i < n; ++i) {
    const int j = n - i;
    z[i] = std::cos(j * std::numbers::pi / (n + 1));
  }
  // cos(pi/2) is 6e-17 rather than 0; the middle zero of odd degree is exact.
  if (n % 2 == 1) z[n / 2] = 0.0;
  return z;
}

}  // namespace llspec
