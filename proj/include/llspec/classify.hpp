#pragma once

#include <optional>
#include <string>
#include <vector>

#include "llspec/mu_param.hpp"

namespace llspec {

/// Membership of mu in one exceptional set. `exact` is false when the answer
/// came from a numerical scan.
struct Membership {
  bool member = false;
  bool exact = false;
};

/// mu = -cos(t) - sin(t) cot(n t) with t = p pi/q and n the smallest index;
/// G_n, G_{n+q}, ... vanish at `position` = -mu - 4 cos t.
struct B1Witness {
  int p = 0;
  int q = 0;
  int n = 0;
  double position = 0.0;
};

struct Classification {
  Membership b1;
  Membership b2;
  Membership b3;
  std::optional<B1Witness> b1_witness;
  int b2_k = 0;  // smallest k with U_k(-mu/2) = 0
  int b3_k = 0;  // mu = 1 + 1/k
  std::vector<std::string> diagnostics;

  bool heuristic() const { return !(b1.exact && b2.exact && b3.exact); }
};

/// Decides membership in B1, B2, B3. Structured forms are decided exactly
/// where the algebra allows; everything else comes from scanning k <= k_max
/// with tolerance `tol`.
Classification classify_mu(const MuParam& mu, int k_max = 30, double tol = 1e-9);

/// Smallest k with U_k(cos(j pi/(k0+1))) = 0, for the B2 form (j, k0).
int b2_minimal_k(long j, long k0);

}  // namespace llspec
