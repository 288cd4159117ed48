#pragma once

#include <complex>
#include <optional>

#include <gmpxx.h>

#include "llspec/tridiagonal.hpp"

// Spectral theory of the one-parameter Jacobi matrix J*(mu): diagonal
// (-mu/2, mu/2, mu/2, ...), unit off-diagonal.

namespace llspec {

struct SpectrumDescription {
  double band_lo = 0.0;
  double band_hi = 0.0;
  std::optional<double> isolated;
  double mass_at_isolated = 0.0;
};

/// n x n leading block of J*(mu).
TridiagonalMatrix jstar_truncation(double mu, int n);

/// -mu/2 - 1/mu when |mu| > 1, otherwise nothing.
std::optional<double> isolated_eigenvalue(double mu);

/// Mass of the orthogonality measure of J*(mu) at its isolated eigenvalue,
/// (mu - 1/mu + sqrt((mu + 1/mu)^2 - 4)) / (2 mu) with the square root
/// continued from positive values on (2, inf). Zero for |mu| <= 1.
double isolated_mass(double mu);

/// Absolutely continuous density of the orthogonality measure,
///   sqrt(4 - (x - mu/2)^2) / (2 pi (mu x + mu^2/2 + 1))  on the band.
/// Throws DomainError where the pole meets the band (|mu| = 1 at an end).
double ac_density(double x, double mu);

/// Square root of (w - a)(w + a) with the cut on [-a, a], positive for real
/// w > a (product of two principal roots).
std::complex<double> sqrt_cut(std::complex<double> w, double a);

/// Stieltjes transform m(z) = integral dnu*(x) / (x - z). Herglotz branch.
/// Throws DomainError for real z on the band.
std::complex<double> m_function(std::complex<double> z, double mu);

/// The unique m >= 1 with (m+1)/m <= |mu| < m/(m-1). Throws DomainError for
/// |mu| <= 1. Values within 1e-12 of a boundary (k+1)/k snap to it.
int critical_index(double mu);

/// Exact version for rational mu.
int critical_index(const mpq_class& mu);

/// Band [-2 + mu/2, 2 + mu/2], isolated point and its mass.
SpectrumDescription jstar_spectrum(double mu);

/// Spectrum of the pencil in lambda coordinates (lambda = -2x): band
/// [-4 - mu, 4 - mu] and, for |mu| > 1, the accumulation point mu + 2/mu.
/// The accumulation point carries no mass of its own.
SpectrumDescription pencil_spectrum(double mu);

}  // namespace llspec
