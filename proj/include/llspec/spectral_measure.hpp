#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "llspec/classify.hpp"
#include "llspec/mu_param.hpp"

namespace llspec {

enum class AtomClass { generic, delta_mu, B1_merged, B2_merged, B3_endpoint };

std::string to_string(AtomClass c);

struct Atom {
  double position = 0.0;
  mpq_class mass;
  std::vector<int> indices;  // k with G_k vanishing here
  AtomClass cls = AtomClass::generic;
};

/// Truncation of nu_mu to the zeros of G_1..G_K.
struct AtomicMeasure {
  MuParam mu;
  int depth = 0;
  std::vector<Atom> atoms;  // ascending by position
  mpq_class tail_mass;      // (K+2) / 2^(K+1)

  mpq_class total_mass() const;
};

/// Default coalescing tolerance for a given mu.
double default_coalesce_tol(double mu);

/// Exact 2^-e.
mpq_class pow2_inv(int e);

/// Tail mass (K+2)/2^(K+1) left out by a depth-K truncation.
mpq_class truncation_tail(int K);

/// coalesce_tol <= 0 selects default_coalesce_tol.
AtomicMeasure measure_truncation(const MuParam& mu, int K, double coalesce_tol = 0.0);

/// Limiting mass of an atom from the closed forms. `index` is the G-index for
/// generic atoms and ignored otherwise. Throws AssumptionError when the
/// classification of mu does not supply exact witnesses.
mpq_class atom_mass_exact(const MuParam& mu, AtomClass cls, int index = 0);

/// Multiplicity of lambda as a root of Phi_n(., mu). Closed-form rules are used
/// for B2 (lambda = mu) and B3 (lambda = 4 - mu); everything else sums the
/// exponents of the vanishing factors. In strict mode the B2 rule refuses
/// (AssumptionError) when G_n(mu, mu) = 0; otherwise the factor sum is used.
/// Throws NotARootError when no factor vanishes within `tol`.
int multiplicity_in_phi(int n, double lambda, const MuParam& mu, bool strict = true,
                        double tol = 1e-7);

/// Bounds on N(x) = nu_mu((-inf, x]) from a truncation.
std::pair<mpq_class, mpq_class> ids_cdf(const AtomicMeasure& m, double x);

/// Indices k with G_k vanishing at `position` are k0, k0 + step, ...;
/// step = 0 means a single index.
struct Progression {
  int k0 = 0;
  int step = 0;
  bool exact = false;
};

Progression arithmetic_progression_indices(const MuParam& mu, double position, int k_max = 60,
                                           double tol = 1e-7);

}  // namespace llspec
