#include "llspec/anderson.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "llspec/error.hpp"
#include "llspec/gh_polys.hpp"

namespace llspec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t word_at(std::uint64_t seed, std::int64_t word) {
  return splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(word) * 0xD1B54A32D192ED03ULL);
}

std::int64_t floor_div64(std::int64_t a) { return a >= 0 ? a / 64 : -((-a + 63) / 64); }

}  // namespace

DisorderWindow sample_window(std::uint64_t seed, std::int64_t offset, std::size_t length) {
  if (length == 0) throw DomainError("window length must be positive");
  DisorderWindow w;
  w.seed = seed;
  w.offset = offset;
  w.bits.resize(length);
  std::int64_t cur_word = floor_div64(offset);
  std::uint64_t bits = word_at(seed, cur_word);
  for (std::size_t i = 0; i < length; ++i) {
    const std::int64_t idx = offset + static_cast<std::int64_t>(i);
    const std::int64_t wi = floor_div64(idx);
    if (wi != cur_word) {
      cur_word = wi;
      bits = word_at(seed, wi);
    }
    w.bits[i] = static_cast<std::uint8_t>((bits >> (idx - wi * 64)) & 1U);
  }
  return w;
}

JacobiSample build_jacobi_sample(const DisorderWindow& w, double mu) {
  if (w.bits.size() < 2) throw DomainError("sample window needs at least two sites");
  JacobiSample s;
  s.mu = mu;
  s.window = w;
  const std::size_t L = w.bits.size();
  s.diag.resize(L);
  s.offdiag.resize(L - 1);
  for (std::size_t n = 0; n < L; ++n) s.diag[n] = w.bits[n] ? mu : -mu;
  for (std::size_t n = 0; n + 1 < L; ++n) s.offdiag[n] = w.bits[n] ? 0.0 : 2.0;
  return s;
}

std::vector<TridiagonalMatrix> block_decompose(const JacobiSample& s) {
  std::vector<TridiagonalMatrix> blocks;
  TridiagonalMatrix cur;
  for (std::size_t n = 0; n < s.diag.size(); ++n) {
    cur.diag.push_back(s.diag[n]);
    const bool cut = n + 1 == s.diag.size() || s.offdiag[n] == 0.0;
    if (cut) {
      blocks.push_back(std::move(cur));
      cur = {};
    } else {
      cur.offdiag.push_back(s.offdiag[n]);
    }
  }
  return blocks;
}

double EmpiricalIDS::cdf(double x) const {
  if (site_count == 0) return 0.0;
  const auto it = std::upper_bound(eigenvalues.begin(), eigenvalues.end(), x);
  return static_cast<double>(it - eigenvalues.begin()) / static_cast<double>(site_count);
}

EmpiricalIDS empirical_ids(const std::vector<JacobiSample>& samples, unsigned workers) {
  std::vector<TridiagonalMatrix> blocks;
  EmpiricalIDS out;
  for (const auto& s : samples) {
    auto b = block_decompose(s);
    if (b.size() <= 2) continue;
    for (std::size_t i = 1; i + 1 < b.size(); ++i) blocks.push_back(std::move(b[i]));
  }
  if (!samples.empty()) out.mu = samples.front().mu;

  std::vector<std::size_t> start(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) start[i + 1] = start[i] + blocks[i].size();
  out.site_count = start.back();
  out.eigenvalues.resize(out.site_count);

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, blocks.size())));
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto ev = tridiag_eigs(blocks[i]);
      std::copy(ev.begin(), ev.end(), out.eigenvalues.begin() + static_cast<std::ptrdiff_t>(start[i]));
    }
  };
  if (workers <= 1) {
    run(0, blocks.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (blocks.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(blocks.size(), w * chunk);
      const std::size_t hi = std::min(blocks.size(), lo + chunk);
      pool.emplace_back(run, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

std::vector<double> default_checkpoints(const AtomicMeasure& m, int count) {
  const double mu = m.mu.value();
  const double lo = -4.0 - std::fabs(mu);
  const double hi = 4.0 + std::fabs(mu);
  const double tol = default_coalesce_tol(mu);
  const double h = (hi - lo) / count;
  std::vector<double> pts;
  for (int i = 0; i < count; ++i) {
    double x = lo + (i + 0.5) * h;
    // Step off any atom; atoms are sparse on the scale of h/1000.
    for (int guard = 0; guard < 100; ++guard) {
      const bool near = std::any_of(m.atoms.begin(), m.atoms.end(), [&](const Atom& a) {
        return std::fabs(a.position - x) < 10.0 * tol;
      });
      if (!near) break;
      x += h * 1e-3;
    }
    pts.push_back(x);
  }
  return pts;
}

IdsComparison compare_ids(const EmpiricalIDS& e, const AtomicMeasure& theory,
                          const std::vector<double>& checkpoints) {
  IdsComparison r;
  r.truncation_width = theory.tail_mass.get_d();
  for (double x : checkpoints) {
    const auto [lo, hi] = ids_cdf(theory, x);
    CheckpointRow row{x, e.cdf(x), lo.get_d(), hi.get_d()};
    r.sup_deviation =
        std::max(r.sup_deviation, std::fabs(row.empirical - 0.5 * (row.theory_lo + row.theory_hi)));
    r.rows.push_back(row);
  }
  return r;
}

SupportReport support_check(const EmpiricalIDS& e, double eps) {
  const double mu = e.mu;
  const double band_lo = -4.0 - mu;
  const double band_hi = 4.0 - mu;
  SupportReport rep;
  std::vector<double> outliers;  // lazily grown: outlier zero of G_k, k = 1, 2, ...
  auto outlier = [&](int k) {
    while (static_cast<int>(outliers.size()) < k) {
      const auto z = g_zeros(static_cast<int>(outliers.size()) + 1, mu);
      outliers.push_back(mu > 0 ? z.back() : z.front());
    }
    return outliers[static_cast<std::size_t>(k - 1)];
  };
  for (double x : e.eigenvalues) {
    if (x >= band_lo - eps && x <= band_hi + eps) continue;
    ++rep.outside_band;
    bool ok = false;
    if (std::fabs(mu) > 1.0) {
      const double accum = mu + 2.0 / mu;
      const bool between = mu > 0 ? x <= accum + eps : x >= accum - eps;
      for (int k = 1; k <= 64 && between && !ok; ++k)
        ok = std::fabs(outlier(k) - x) <= eps;
    }
    if (!ok) {
      ++rep.unexplained;
      const double d = std::min(std::fabs(x - band_lo), std::fabs(x - band_hi));
      rep.worst_excess = std::max(rep.worst_excess, d);
    }
  }
  return rep;
}

}  // namespace llspec
