#pragma once

#include <cmath>
#include <limits>

namespace llspec {

/// A real number stored as sign and natural log of its magnitude. Zero is
/// sign 0 with log_abs = -inf.
struct SignedLog {
  int sign = 0;
  double log_abs = -std::numeric_limits<double>::infinity();

  static SignedLog from(double x) {
    if (x == 0.0 || std::isnan(x)) return {};
    return {x > 0 ? 1 : -1, std::log(std::fabs(x))};
  }

  bool is_zero() const { return sign == 0; }

  /// Converts back to a double; may over/underflow.
  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  SignedLog& operator*=(const SignedLog& o) {
    if (sign == 0 || o.sign == 0) {
      *this = {};
    } else {
      sign *= o.sign;
      log_abs += o.log_abs;
    }
    return *this;
  }

  /// Raise to a non-negative integer power given as a double exponent, so
  /// exponents like 2^40 stay representable.
  SignedLog pow(double exponent) const {
    if (exponent == 0.0) return {1, 0.0};
    if (sign == 0) return {};
    const bool odd = std::fmod(exponent, 2.0) == 1.0;
    return {(sign < 0 && odd) ? -1 : 1, log_abs * exponent};
  }
};

inline SignedLog operator*(SignedLog a, const SignedLog& b) { return a *= b; }

/// Mantissa/binary-exponent pair used for extended-range recurrences.
struct ScaledValue {
  double mantissa = 0.0;
  long exponent = 0;

  double value() const { return std::ldexp(mantissa, static_cast<int>(exponent)); }
  double log_abs() const {
    return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
  }
  int sign() const { return mantissa > 0 ? 1 : (mantissa < 0 ? -1 : 0); }
  SignedLog signed_log() const {
    if (mantissa == 0.0) return {};
    return {sign(), log_abs()};
  }
};

}  // namespace llspec
