#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace llspec {

/// Unstructured floating value.
struct FloatForm {
  double x = 0.0;
};

/// p/q in lowest terms, q > 0.
struct RationalForm {
  std::int64_t p = 0;
  std::int64_t q = 1;
};

/// mu = -cos(p pi/q) - sin(p pi/q) cot(n p pi/q); coprime 0 < p < q, n >= 1,
/// q not dividing n. G_n vanishes at lambda = -mu - 4 cos(p pi/q).
struct B1Form {
  std::int64_t p = 1;
  std::int64_t q = 2;
  std::int64_t n = 1;
};

/// mu = 2 cos(j pi/(k+1)), 1 <= j <= k, so that U_k(-mu/2) = 0.
struct B2Form {
  std::int64_t j = 1;
  std::int64_t k = 1;
};

/// The spectral parameter, keeping enough structure to decide membership in
/// the exceptional sets exactly when possible.
class MuParam {
 public:
  using Form = std::variant<FloatForm, RationalForm, B1Form, B2Form>;

  MuParam() : MuParam(FloatForm{0.0}) {}
  explicit MuParam(Form form);

  static MuParam from_double(double x) { return MuParam(FloatForm{x}); }
  static MuParam rational(std::int64_t p, std::int64_t q);
  static MuParam b1(std::int64_t p, std::int64_t q, std::int64_t n);
  static MuParam b2(std::int64_t j, std::int64_t k);

  /// Accepts "float:0.3", "rat:7/6", "rat:2", "b1:p/q:n", "b2:j/k", or a bare
  /// decimal (treated as float). Throws ParseError.
  static MuParam parse(std::string_view text);

  /// Tagged form; parse(to_string()) reproduces the same form and value.
  std::string to_string() const;

  const Form& form() const { return form_; }
  double value() const { return value_; }
  bool is_structured() const { return !std::holds_alternative<FloatForm>(form_); }

  /// Exact value for RationalForm; nothing otherwise.
  std::optional<mpq_class> exact() const;

 private:
  Form form_;
  double value_ = 0.0;
};

}  // namespace llspec
