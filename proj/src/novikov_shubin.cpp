#include "llspec/novikov_shubin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "llspec/error.hpp"
#include "llspec/gh_polys.hpp"
#include "llspec/jacobi_spectral.hpp"

namespace llspec {

namespace {

// Writing lambda = -mu - 2(w + 1/w), the outlier of G_m solves
// w + 1/mu = w^(2m+1) (mu - 1/mu + w + 1/mu) / mu, a contraction near
// w* = -1/mu once m is moderately large. Returns NaN if it does not settle.
double gap_fixed_point(int m, double mu) {
  const double ws = -1.0 / mu;
  double eps = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double w = ws + eps;
    const double next = std::pow(w, 2 * m + 1) * (mu - 1.0 / mu + eps) / mu;
    if (!std::isfinite(next) || std::fabs(next) > 0.5 * std::fabs(ws)) break;
    if (std::fabs(next - eps) <= 1e-15 * std::fabs(next)) {
      const double gap = 2.0 * next * (1.0 - 1.0 / (w * ws));
      return gap > 0.0 ? gap : std::numeric_limits<double>::quiet_NaN();
    }
    eps = next;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

double outlier_gap(int m, double mu) {
  if (!(mu > 1.0)) throw DomainError("gap sequence needs mu > 1");
  const double target = mu + 2.0 / mu;
  const double fp = gap_fixed_point(m, mu);
  if (std::isfinite(fp) && fp < 1e-8) return fp;
  // Large gaps are resolved directly; also guards the fixed point at small m.
  const double direct = target - g_largest_zero(m, mu);
  return direct;
}

GapSequence gap_sequence(double mu, int M) {
  if (!(mu > 1.0)) throw DomainError("gap sequence needs mu > 1");
  const int m0 = critical_index(mu);
  if (M < m0 + 5) throw DomainError("gap sequence needs M >= critical_index(mu) + 5");
  GapSequence seq;
  seq.mu = mu;
  const double target = mu + 2.0 / mu;
  for (int m = m0; m <= M; ++m) {
    GapEntry e;
    e.m = m;
    e.gap = outlier_gap(m, mu);
    e.x_m = target - e.gap;
    e.log_gap = std::log(e.gap);
    seq.entries.push_back(e);
  }
  return seq;
}

double decay_rate(const GapSequence& seq) {
  std::vector<double> x, y;
  for (const auto& e : seq.entries) {
    if (!(e.gap > 0.0)) continue;
    x.push_back(e.m);
    y.push_back(e.log_gap);
  }
  if (x.size() < 10) throw DomainError("decay rate needs at least 10 positive gaps");
  return std::exp(slope(x, y));
}

double ns_closed_form(double mu) {
  if (!(mu > 1.0)) throw DomainError("Novikov-Shubin example needs mu > 1");
  // log2 is exact at powers of two.
  return 0.5 / std::log2(mu);
}

NSInvariant ns_invariant(double mu, int M, int window) {
  NSInvariant r;
  r.closed_form = ns_closed_form(mu);
  const GapSequence seq = gap_sequence(mu, M);
  const auto& es = seq.entries;
  if (window < 2 || static_cast<int>(es.size()) < window)
    throw DomainError("not enough gaps for the requested window");
  const std::size_t first = std::min(es.size() / 2, es.size() - static_cast<std::size_t>(window));
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = first; s + static_cast<std::size_t>(window) <= es.size(); ++s) {
    std::vector<double> x, y;
    for (std::size_t i = s; i < s + static_cast<std::size_t>(window); ++i) {
      x.push_back(es[i].log_gap);
      y.push_back(-es[i].m * std::log(2.0));
    }
    best = std::min(best, slope(x, y));
  }
  r.empirical = best;
  return r;
}

}  // namespace llspec
