#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "llspec/spectral_measure.hpp"
#include "llspec/tridiagonal.hpp"

namespace llspec {

/// Bernoulli(1/2) bits for absolute sites offset .. offset+L-1.
struct DisorderWindow {
  std::vector<std::uint8_t> bits;
  std::int64_t offset = 0;
  std::uint64_t seed = 0;
};

/// Bits are a pure function of (seed, absolute index), so overlapping windows
/// agree and disjoint windows are independent.
DisorderWindow sample_window(std::uint64_t seed, std::int64_t offset, std::size_t length);

/// diag[n] = +mu for bit 1, -mu for bit 0; offdiag[n] couples n and n+1 and is
/// 2 for bit_n = 0, 0 for bit_n = 1.
struct JacobiSample {
  double mu = 0.0;
  std::vector<double> diag;
  std::vector<double> offdiag;
  DisorderWindow window;
};

JacobiSample build_jacobi_sample(const DisorderWindow& w, double mu);

/// Splits at zero couplings. Blocks concatenate back to the sample.
std::vector<TridiagonalMatrix> block_decompose(const JacobiSample& s);

struct EmpiricalIDS {
  double mu = 0.0;
  std::vector<double> eigenvalues;  // ascending, each of weight 1/site_count
  std::size_t site_count = 0;

  /// Fraction of eigenvalues <= x.
  double cdf(double x) const;
};

/// Pools eigenvalues of all interior blocks; the first and last block of each
/// sample touch the window edge and are dropped. workers = 0 uses all cores.
/// The result does not depend on the worker count.
EmpiricalIDS empirical_ids(const std::vector<JacobiSample>& samples, unsigned workers = 0);

struct CheckpointRow {
  double x = 0.0;
  double empirical = 0.0;
  double theory_lo = 0.0;
  double theory_hi = 0.0;
};

struct IdsComparison {
  double sup_deviation = 0.0;     // against the midpoint of the theory interval
  double truncation_width = 0.0;  // tail mass of the truncation
  std::vector<CheckpointRow> rows;
};

/// `count` evenly spaced points over [-4-|mu|, 4+|mu|], each nudged off atoms.
std::vector<double> default_checkpoints(const AtomicMeasure& m, int count = 50);

IdsComparison compare_ids(const EmpiricalIDS& e, const AtomicMeasure& theory,
                          const std::vector<double>& checkpoints);

/// Eigenvalues outside [-4-mu, 4-mu] (widened by eps) must be outlier zeros of
/// some G_k, which lie between the band and mu + 2/mu.
struct SupportReport {
  std::size_t outside_band = 0;
  std::size_t unexplained = 0;
  double worst_excess = 0.0;  // largest distance of an unexplained value from the allowed set
};

SupportReport support_check(const EmpiricalIDS& e, double eps = 1e-6);

}  // namespace llspec
