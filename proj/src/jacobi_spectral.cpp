#include "llspec/jacobi_spectral.hpp"

#include <cmath>
#include <numbers>

#include "llspec/error.hpp"

namespace llspec {

TridiagonalMatrix jstar_truncation(double mu, int n) {
  if (n < 1) throw DomainError("jstar_truncation: n must be positive");
  TridiagonalMatrix t;
  t.diag.assign(static_cast<std::size_t>(n), mu / 2.0);
  t.diag[0] = -mu / 2.0;
  t.offdiag.assign(static_cast<std::size_t>(n - 1), 1.0);
  return t;
}

std::optional<double> isolated_eigenvalue(double mu) {
  if (!(std::fabs(mu) > 1.0)) return std::nullopt;
  return -mu / 2.0 - 1.0 / mu;
}

double isolated_mass(double mu) {
  if (mu == 0.0) return 0.0;
  const double z = mu + 1.0 / mu;  // |z| >= 2
  const double root = std::copysign(std::sqrt(std::max(0.0, (std::fabs(z) - 2.0) * (std::fabs(z) + 2.0))), z);
  const double mass = (mu - 1.0 / mu + root) / (2.0 * mu);
  // Exact cancellation for |mu| <= 1 leaves rounding noise of either sign.
  return std::fabs(mu) <= 1.0 ? 0.0 : mass;
}

double ac_density(double x, double mu) {
  const double lo = -2.0 + mu / 2.0;
  const double hi = 2.0 + mu / 2.0;
  if (x < lo || x > hi) return 0.0;
  const double d = x - mu / 2.0;
  const double num = std::sqrt(std::max(0.0, (2.0 - d) * (2.0 + d)));
  const double den = 2.0 * std::numbers::pi * (mu * x + mu * mu / 2.0 + 1.0);
  if (den == 0.0) throw DomainError("ac_density: pole on the band edge (|mu| = 1)");
  return num / den;
}

std::complex<double> sqrt_cut(std::complex<double> w, double a) {
  return std::sqrt(w - a) * std::sqrt(w + a);
}

std::complex<double> m_function(std::complex<double> z, double mu) {
  if (z.imag() == 0.0 && z.real() >= -2.0 + mu / 2.0 && z.real() <= 2.0 + mu / 2.0)
    throw DomainError("m_function: z lies on the band");
  // m-function of the stripped matrix (constant diagonal mu/2): semicircle
  // law centred at mu/2, Herglotz branch.
  const std::complex<double> m0 = mu / 4.0 - z / 2.0 + sqrt_cut(z - mu / 2.0, 2.0) / 2.0;
  return 1.0 / (-mu / 2.0 - z - m0);
}

int critical_index(double mu) {
  const double a = std::fabs(mu);
  if (!(a > 1.0)) throw DomainError("critical_index: requires |mu| > 1");
  if (a >= 2.0) return 1;
  const double r = 1.0 / (a - 1.0);
  const double nearest = std::round(r);
  if (std::fabs(r - nearest) <= 1e-12 * std::max(1.0, r)) return static_cast<int>(nearest);
  return static_cast<int>(std::ceil(r));
}

int critical_index(const mpq_class& mu) {
  const mpq_class a = abs(mu);
  if (a <= 1) throw DomainError("critical_index: requires |mu| > 1");
  // Smallest m with m >= 1/(a-1), i.e. ceil(q / (p - q)) for a = p/q.
  const mpq_class r = 1 / (a - 1);
  mpz_class m;
  mpz_cdiv_q(m.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  if (m < 1) m = 1;
  return static_cast<int>(m.get_si());
}

SpectrumDescription jstar_spectrum(double mu) {
  SpectrumDescription s;
  s.band_lo = -2.0 + mu / 2.0;
  s.band_hi = 2.0 + mu / 2.0;
  s.isolated = isolated_eigenvalue(mu);
  s.mass_at_isolated = isolated_mass(mu);
  return s;
}

SpectrumDescription pencil_spectrum(double mu) {
  SpectrumDescription s;
  s.band_lo = -4.0 - mu;
  s.band_hi = 4.0 - mu;
  if (std::fabs(mu) > 1.0) s.isolated = mu + 2.0 / mu;
  s.mass_at_isolated = 0.0;
  return s;
}

}  // namespace llspec
