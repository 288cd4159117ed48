#include "llspec/spectral_measure.hpp"

#include <algorithm>
#include <cmath>

#include "llspec/error.hpp"
#include "llspec/gh_polys.hpp"
#include "llspec/lamplighter_rep.hpp"

namespace llspec {

namespace {

mpz_class pow2(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

bool g_vanishes_near(int k, double mu, double lambda, double ptol) {
  if (k == 1) return std::fabs(lambda - mu) <= ptol;
  for (double z : g_zeros(k, mu))
    if (std::fabs(z - lambda) <= ptol) return true;
  return false;
}

}  // namespace

std::string to_string(AtomClass c) {
  switch (c) {
    case AtomClass::generic: return "generic";
    case AtomClass::delta_mu: return "delta_mu";
    case AtomClass::B1_merged: return "B1_merged";
    case AtomClass::B2_merged: return "B2_merged";
    case AtomClass::B3_endpoint: return "B3_endpoint";
  }
  return "generic";
}

mpq_class pow2_inv(int e) {
  mpq_class r(mpz_class(1), pow2(static_cast<unsigned long>(e)));
  r.canonicalize();
  return r;
}

mpq_class truncation_tail(int K) {
  mpq_class r(mpz_class(K + 2), pow2(static_cast<unsigned long>(K + 1)));
  r.canonicalize();
  return r;
}

mpq_class AtomicMeasure::total_mass() const {
  mpq_class s = tail_mass;
  for (const auto& a : atoms) s += a.mass;
  return s;
}

double default_coalesce_tol(double mu) {
  return 1e-9 * std::max(1.0, std::fabs(4.0 - mu) + std::fabs(4.0 + mu));
}

AtomicMeasure measure_truncation(const MuParam& mu, int K, double coalesce_tol) {
  if (K < 1) throw DomainError("measure depth must be at least 1");
  const double x = mu.value();
  const double tol = coalesce_tol > 0.0 ? coalesce_tol : default_coalesce_tol(x);

  std::vector<std::pair<double, int>> pts;
  pts.emplace_back(x, 1);
  for (int k = 2; k <= K; ++k)
    for (double z : g_zeros(k, x)) pts.emplace_back(z, k);
  std::sort(pts.begin(), pts.end());

  AtomicMeasure m;
  m.mu = mu;
  m.depth = K;
  m.tail_mass = truncation_tail(K);
  for (std::size_t i = 0; i < pts.size();) {
    std::size_t j = i + 1;
    while (j < pts.size() && pts[j].first - pts[j - 1].first <= tol) ++j;
    Atom a;
    int lowest = K + 1;
    for (std::size_t r = i; r < j; ++r) {
      a.indices.push_back(pts[r].second);
      a.mass += pow2_inv(pts[r].second + 1);
      if (pts[r].second < lowest) {
        lowest = pts[r].second;
        a.position = pts[r].first;
      }
    }
    std::sort(a.indices.begin(), a.indices.end());
    const bool has_mu = a.indices.front() == 1;
    if (has_mu) {
      a.cls = a.indices.size() > 1 ? AtomClass::B2_merged : AtomClass::delta_mu;
    } else if (std::fabs(a.position - (4.0 - x)) <= tol) {
      a.cls = AtomClass::B3_endpoint;
    } else if (std::fabs(a.position + x) > 4.0 + tol) {
      // Outliers of distinct G_k only merge here because they crowd toward
      // mu + 2/mu faster than the tolerance; that is not a B1 collision.
      a.cls = AtomClass::generic;
    } else {
      a.cls = a.indices.size() > 1 ? AtomClass::B1_merged : AtomClass::generic;
    }
    m.atoms.push_back(std::move(a));
    i = j;
  }
  return m;
}

mpq_class atom_mass_exact(const MuParam& mu, AtomClass cls, int index) {
  switch (cls) {
    case AtomClass::generic:
      if (index < 1) throw AssumptionError("generic atom needs its G-index");
      return pow2_inv(index + 1);
    case AtomClass::delta_mu:
      return pow2_inv(2);
    default:
      break;
  }
  const Classification c = classify_mu(mu);
  if (cls == AtomClass::B1_merged) {
    if (!c.b1.exact || !c.b1.member || !c.b1_witness)
      throw AssumptionError("B1 mass needs an exact witness (use a b1: or b2: form)");
    const auto& w = *c.b1_witness;
    const mpz_class twoq = pow2(static_cast<unsigned long>(w.q));
    mpq_class r(twoq, pow2(static_cast<unsigned long>(w.n + 1)) * (twoq - 1));
    r.canonicalize();
    return r;
  }
  if (cls == AtomClass::B2_merged) {
    if (!c.b2.exact || !c.b2.member)
      throw AssumptionError("B2 mass needs an exact witness (use a b2: or rat: form)");
    mpq_class r(mpz_class(1), 4 * (pow2(static_cast<unsigned long>(c.b2_k + 1)) - 1));
    r.canonicalize();
    return pow2_inv(2) + r;
  }
  if (!c.b3.exact || !c.b3.member)
    throw AssumptionError("B3 mass needs mu = 1 + 1/k given exactly (use a rat: form)");
  return pow2_inv(c.b3_k + 1);
}

int multiplicity_in_phi(int n, double lambda, const MuParam& mu, bool strict, double tol) {
  if (n < 0 || n > 30) throw DomainError("multiplicity level must lie in [0, 30]");
  const double x = mu.value();
  const double ptol = tol * std::max(1.0, std::fabs(lambda));
  const bool at_end = std::fabs(lambda - (4.0 - x)) <= ptol;

  long long sum = at_end ? 1 : 0;
  for (int k = 1; k <= n; ++k)
    if (g_vanishes_near(k, x, lambda, ptol)) sum += static_cast<long long>(g_exponent_in_phi(n, k));
  if (sum == 0) throw NotARootError("lambda is not a root of Phi_n(., mu)");

  const Classification c = classify_mu(mu, std::max(30, n + 2));
  if (n >= 2 && c.b2.member && c.b2.exact && std::fabs(lambda - x) <= ptol) {
    const int k = c.b2_k;
    if ((n - 1) % (k + 1) == 0) {
      if (strict)
        throw AssumptionError("closed-form B2 multiplicity needs G_n(mu, mu) != 0");
      return static_cast<int>(sum);
    }
    const int J = (n - 1) / (k + 1);
    const unsigned long kj = static_cast<unsigned long>((k + 1) * J);
    mpq_class extra((pow2(kj) - 1) * pow2(static_cast<unsigned long>(n) - kj),
                    4 * (pow2(static_cast<unsigned long>(k + 1)) - 1));
    extra.canonicalize();
    const mpq_class total = mpq_class(pow2(static_cast<unsigned long>(n - 2))) + extra;
    if (total.get_den() != 1) throw AssumptionError("B2 multiplicity formula is not integral");
    return static_cast<int>(total.get_num().get_si());
  }
  if (c.b3.member && c.b3.exact && at_end)
    return 1 + static_cast<int>(g_exponent_in_phi(n, c.b3_k));
  return static_cast<int>(sum);
}

std::pair<mpq_class, mpq_class> ids_cdf(const AtomicMeasure& m, double x) {
  mpq_class lo;
  for (const auto& a : m.atoms)
    if (a.position <= x) lo += a.mass;
  return {lo, lo + m.tail_mass};
}

Progression arithmetic_progression_indices(const MuParam& mu, double position, int k_max,
                                           double tol) {
  const double ptol = tol * std::max(1.0, std::fabs(position));
  const Classification c = classify_mu(mu);
  if (c.b1.exact && c.b1_witness && std::fabs(position - c.b1_witness->position) <= ptol)
    return {c.b1_witness->n, c.b1_witness->q, true};

  std::vector<int> ks;
  for (int k = 1; k <= k_max && ks.size() < 2; ++k)
    if (g_vanishes_near(k, mu.value(), position, ptol)) ks.push_back(k);
  if (ks.empty()) return {};
  if (ks.size() == 1) return {ks[0], 0, false};
  return {ks[0], ks[1] - ks[0], false};
}

}  // namespace llspec
