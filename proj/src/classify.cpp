#include "llspec/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>
#include <variant>

#include "llspec/chebyshev.hpp"
#include "llspec/gh_polys.hpp"

namespace llspec {

namespace {

struct Exact {
  Membership b1, b2, b3;
  std::optional<B1Witness> w;
  int b2_k = 0;
  int b3_k = 0;
};

B1Witness b1_from_b2(long j, long k0, double mu) {
  const long g = std::gcd(j, k0 + 1);
  return {static_cast<int>((k0 + 1 - j) / g), static_cast<int>((k0 + 1) / g), 1, mu};
}

// Scan in-band zeros of G_1..G_kmax for a point shared by two indices.
std::optional<B1Witness> scan_b1(double mu, int k_max, double tol) {
  const double scale = std::max(1.0, std::fabs(mu) + 4.0);
  std::vector<std::pair<double, int>> pts;
  for (int k = 1; k <= k_max; ++k)
    for (double z : g_zeros(k, mu))
      if (std::fabs(z + mu) < 4.0 - tol * scale) pts.emplace_back(z, k);
  std::sort(pts.begin(), pts.end());

  std::optional<B1Witness> best;
  for (std::size_t i = 0; i < pts.size();) {
    std::size_t j = i + 1;
    while (j < pts.size() && pts[j].first - pts[j - 1].first <= tol * scale) ++j;
    if (j - i >= 2) {
      std::vector<int> ks;
      for (std::size_t r = i; r < j; ++r) ks.push_back(pts[r].second);
      std::sort(ks.begin(), ks.end());
      ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
      if (ks.size() >= 2) {
        const double pos = pts[i].first;
        const int q = ks[1] - ks[0];
        const double t = std::acos(std::clamp((-pos - mu) / 4.0, -1.0, 1.0));
        int p = static_cast<int>(std::lround(t * q / std::numbers::pi));
        int qq = q;
        if (p > 0 && p < q) {
          const int g = std::gcd(p, q);
          p /= g;
          qq /= g;
        }
        B1Witness w{p, qq, ks[0], pos};
        if (!best || w.n < best->n || (w.n == best->n && w.q < best->q)) best = w;
      }
    }
    i = j;
  }
  return best;
}

int scan_b2(double mu, int k_max, double tol) {
  if (std::fabs(mu) >= 2.0) return 0;
  for (int k = 1; k <= k_max; ++k)
    if (std::fabs(u_eval(k, -mu / 2.0)) <= tol * (k + 1)) return k;
  return 0;
}

int scan_b3(double mu, int k_max, double tol) {
  for (int k = 1; k <= k_max; ++k)
    if (std::fabs(mu - 1.0 - 1.0 / k) <= tol) return k;
  return 0;
}

}  // namespace

int b2_minimal_k(long j, long k0) { return static_cast<int>((k0 + 1) / std::gcd(j, k0 + 1) - 1); }

Classification classify_mu(const MuParam& mu, int k_max, double tol) {
  const double x = mu.value();
  Exact e;

  if (const auto* f = std::get_if<B2Form>(&mu.form())) {
    e.b2 = {true, true};
    e.b2_k = b2_minimal_k(f->j, f->k);
    e.b1 = {true, true};
    e.w = b1_from_b2(f->j, f->k, x);
    // B2 values are irrational unless in {0, +-1}, and those lie below 1 + 1/k.
    e.b3 = {false, true};
  } else if (const auto* f = std::get_if<B1Form>(&mu.form())) {
    const int n_min = static_cast<int>((f->n - 1) % f->q + 1);
    const double t = std::numbers::pi * static_cast<double>(f->p) / static_cast<double>(f->q);
    e.b1 = {true, true};
    e.w = B1Witness{static_cast<int>(f->p), static_cast<int>(f->q), n_min,
                    -x - 4.0 * std::cos(t)};
    if (n_min == 1) {
      // mu = -2 cos(p pi/q): U_k(cos(p pi/q)) first vanishes at k = q - 1.
      e.b2 = {true, true};
      e.b2_k = static_cast<int>(f->q - 1);
      e.w->position = x;
    } else if (int k = scan_b2(x, k_max, tol)) {
      e.b2 = {true, false};
      e.b2_k = k;
    } else {
      e.b2 = {false, false};
    }
    const int k3 = scan_b3(x, k_max, tol);
    e.b3 = {k3 != 0, false};
    e.b3_k = k3;
  } else if (const auto* f = std::get_if<RationalForm>(&mu.form())) {
    if (f->p == f->q + 1) {
      e.b3 = {true, true};
      e.b3_k = static_cast<int>(f->q);
    } else {
      e.b3 = {false, true};
    }
    // Niven: the only rationals 2cos(j pi/(k+1)) with 1 <= j <= k are 0, 1, -1.
    if (f->q == 1 && (f->p == 0 || f->p == 1 || f->p == -1)) {
      const long j = f->p == 0 ? 1 : (f->p == 1 ? 1 : 2);
      const long k0 = f->p == 0 ? 1 : 2;
      e.b2 = {true, true};
      e.b2_k = b2_minimal_k(j, k0);
      e.b1 = {true, true};
      e.w = b1_from_b2(j, k0, x);
    } else {
      e.b2 = {false, true};
      e.w = scan_b1(x, k_max, tol);
      e.b1 = {e.w.has_value(), false};
    }
  } else {
    e.b2_k = scan_b2(x, k_max, tol);
    e.b2 = {e.b2_k != 0, false};
    e.b3_k = scan_b3(x, k_max, tol);
    e.b3 = {e.b3_k != 0, false};
    e.w = scan_b1(x, k_max, tol);
    e.b1 = {e.w.has_value(), false};
  }

  Classification c;
  c.b1 = e.b1;
  c.b2 = e.b2;
  c.b3 = e.b3;
  c.b1_witness = e.w;
  c.b2_k = e.b2_k;
  c.b3_k = e.b3_k;
  if (c.b1.member && c.b3.member)
    c.diagnostics.push_back("mu is in both B1 and B3; no combined mass rule is available");
  if (c.b1.member && c.b2.member && c.b1_witness &&
      std::fabs(c.b1_witness->position - x) > 1e-9 * std::max(1.0, std::fabs(x)))
    c.diagnostics.push_back(
        "mu is in B2 and has a B1 collision away from lambda = mu; masses are per atom");
  if (!c.b1.exact || !c.b2.exact || !c.b3.exact)
    c.diagnostics.push_back("membership decided numerically for k <= " + std::to_string(k_max));
  return c;
}

}  // namespace llspec
