#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

// Integer polynomials in (lambda, mu), used for exact symbolic checks of the
// low-level characteristic polynomials.

namespace llspec {

class BiPoly {
 public:
  using Exponents = std::pair<int, int>;  // (power of lambda, power of mu)

  BiPoly() = default;
  BiPoly(std::int64_t constant);  // NOLINT: implicit by design of the algebra

  static BiPoly lambda();
  static BiPoly mu();

  std::int64_t coeff(int i, int j) const;
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  int total_degree() const;
  bool is_zero() const { return terms_.empty(); }

  double evaluate(double lambda, double mu) const;
  std::string to_string() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly operator-() const;
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BiPoly pow(unsigned e) const;

 private:
  void add_term(Exponents e, std::int64_t c);
  std::map<Exponents, std::int64_t> terms_;
};

/// det(M_n(mu) - lambda I) expanded exactly. Exponential cost; n <= 4.
BiPoly phi_symbolic(int n);

/// G_k from the recursion G_{k+1} = (-lambda - mu) G_k - 4 G_{k-1},
/// G_0 = 1, G_1 = mu - lambda.
BiPoly g_symbolic(int k);

}  // namespace llspec
