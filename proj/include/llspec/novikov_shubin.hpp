#pragma once

#include <vector>

namespace llspec {

struct GapEntry {
  int m = 0;
  double x_m = 0.0;      // largest zero of G_m
  double gap = 0.0;      // mu + 2/mu - x_m, computed without cancellation
  double log_gap = 0.0;  // natural log of gap
};

struct GapSequence {
  double mu = 0.0;
  std::vector<GapEntry> entries;  // m = critical_index(mu) .. M
};

/// Distance from the outlier zero of G_m to the accumulation point mu + 2/mu.
/// Requires mu > 1.
double outlier_gap(int m, double mu);

GapSequence gap_sequence(double mu, int M);

/// exp of the least-squares slope of log(gap) against m. Needs >= 10 entries.
double decay_rate(const GapSequence& seq);

struct NSInvariant {
  double closed_form = 0.0;
  double empirical = 0.0;
};

/// log 2 / (2 log mu).
double ns_closed_form(double mu);

/// Empirical value is the smallest slope of -m log 2 against log(gap_m) over
/// sliding windows of `window` entries in the second half of the sequence.
NSInvariant ns_invariant(double mu, int M = 60, int window = 10);

}  // namespace llspec
