#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "llspec/bipoly.hpp"
#include "llspec/chebyshev.hpp"
#include "llspec/error.hpp"
#include "llspec/gh_polys.hpp"
#include "llspec/jacobi_spectral.hpp"

using namespace llspec;

TEST_SUITE("gh_polys") {

TEST_CASE("g_value small cases") {
  CHECK(g_value(1, 0.3, 1.7) == doctest::Approx((1.7 - 0.3) / 2));
  CHECK(g_value(2, 0.0, 0.0) == doctest::Approx(-1.0));
  // (-lambda-mu) G_2 - 4 G_1 at (1,1) is 8, so g_3 = 1.
  CHECK(8 * g_value(3, 1.0, 1.0) == doctest::Approx(8.0));
  CHECK(g_value_recursive(2, 0.0, 0.0) == doctest::Approx(-1.0));
  CHECK(g_value_recursive(1, 2.0, 0.5) == doctest::Approx(-0.75));
}

TEST_CASE("closed form matches symbolic G_k") {
  for (int k = 1; k <= 8; ++k) {
    const BiPoly G = g_symbolic(k);
    for (double l : {-3.1, -0.4, 0.9, 2.6})
      for (double m : {-1.7, 0.0, 0.6, 2.2})
        CHECK(std::ldexp(g_value(k, l, m), k) == doctest::Approx(G.evaluate(l, m)).epsilon(1e-12));
  }
}

TEST_CASE("closed form with 2^(k+1) coefficient fails at k = 2") {
  // The 2^(k+1) variant of the closed form gives lambda^2 - mu^2 - 8 at k = 2.
  auto closed_form = [](int k, double l, double m, double c) {
    const double s = (-l - m) / 4;
    return std::ldexp(m - l, k - 1) * u_eval(k - 1, s) - c * u_eval(k - 2, s);
  };
  const BiPoly G2 = g_symbolic(2);
  CHECK(G2 == BiPoly::lambda() * BiPoly::lambda() - BiPoly::mu() * BiPoly::mu() - 4);
  for (double l : {0.0, 1.3, -2.2})
    for (double m : {0.0, 0.7}) {
      CHECK(closed_form(2, l, m, 4.0) == doctest::Approx(l * l - m * m - 4));
      CHECK(closed_form(2, l, m, 8.0) == doctest::Approx(l * l - m * m - 8));
      CHECK(std::fabs(closed_form(2, l, m, 8.0) - G2.evaluate(l, m)) == doctest::Approx(4.0));
    }
}

TEST_CASE("three realizations agree") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> L(-6, 6), M(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const double l = L(rng), m = M(rng);
    for (int k = 1; k <= 50; ++k) {
      const double a = g_value(k, l, m), b = g_value_recursive(k, l, m);
      CHECK(std::fabs(a - b) <= 1e-9 * (k + 1) * std::max(1.0, std::fabs(a)));
    }
  }
  for (int k = 1; k <= 30; ++k)
    for (double t = 0.05; t < std::numbers::pi; t += 0.2)
      for (double m : {-2.0, -0.5, 0.3, 1.4}) {
        const double lam = -m - 4 * std::cos(t);
        CHECK(angular_form(k, t, m) ==
              doctest::Approx(std::sin(t) * g_value(k, lam, m)).epsilon(1e-9).scale(1.0));
      }
}

TEST_CASE("angular form") {
  CHECK(std::fabs(angular_form(1, std::numbers::pi / 2, 0.0)) < 1e-15);
  CHECK(angular_form(2, 2 * std::numbers::pi / 3, 1.0) == doctest::Approx(-std::sqrt(3.0) / 2));
  CHECK_THROWS_AS(angular_form(3, 0.0, 0.5), DomainError);
  CHECK_THROWS_AS(angular_form(3, std::numbers::pi, 0.5), DomainError);
}

TEST_CASE("h is the previous g") {
  for (int k = 2; k < 20; ++k) {
    const auto v = gh_value(k, 0.7, -1.1);
    CHECK(v.h_normalized == doctest::Approx(g_value(k - 1, 0.7, -1.1)));
  }
}

TEST_CASE("monic orthogonal polynomials") {
  for (int k = 1; k < 15; ++k)
    for (double z : {-1.5, 0.2, 2.4}) {
      const double mu = 0.8;
      CHECK(monic_op_value(k, z, mu) == doctest::Approx(g_value(k, -2 * z, mu)).epsilon(1e-12));
    }
}

TEST_CASE("g_zeros examples") {
  CHECK(g_zeros(1, 0.37) == std::vector<double>{0.37});
  const auto z = g_zeros(2, 0.0);
  CHECK(z[0] == doctest::Approx(-2.0));
  CHECK(z[1] == doctest::Approx(2.0));
  const auto big = g_zeros(40, 2.0);
  CHECK(std::fabs(big.back() - 3.0) < 1e-6);
}

TEST_CASE("g_zeros residuals, simplicity, translation") {
  for (double mu : {-3.0, -1.2, -0.4, 0.0, 0.9, 1.5, 3.0}) {
    for (int k : {1, 2, 5, 17, 60, 200}) {
      const auto z = g_zeros(k, mu);
      REQUIRE(z.size() == static_cast<std::size_t>(k));
      const auto ev = tridiag_eigs(jstar_truncation(mu, k));
      for (std::size_t i = 0; i < z.size(); ++i) {
        CHECK(std::fabs(z[i] + 2 * ev[z.size() - 1 - i]) < 1e-9);
        if (i) CHECK(z[i] - z[i - 1] > 1e-9);
        // Residual relative to the size of the two Chebyshev terms.
        const double s = (-z[i] - mu) / 4;
        const double scale = std::max(1.0, std::fabs(u_eval(k, s)) + std::fabs(mu * u_eval(k - 1, s)));
        CHECK(std::fabs(g_value(k, z[i], mu)) <= 1e-8 * (k + 1) * std::max(1.0, std::fabs(mu)) * scale);
      }
    }
  }
}

TEST_CASE("zeros interlace after removing the outlier") {
  for (double mu : {0.4, 1.6, -2.1}) {
    for (int k = 2; k < 30; ++k) {
      auto a = g_zeros(k, mu), b = g_zeros(k + 1, mu);
      auto strip = [&](std::vector<double>& v) {
        std::erase_if(v, [&](double x) { return std::fabs(x + mu) > 4; });
      };
      strip(a);
      strip(b);
      if (b.size() != a.size() + 1) continue;
      for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        int between = 0;
        for (double z : a) between += (z > b[i] && z < b[i + 1]);
        CHECK(between == 1);
      }
    }
  }
}

TEST_CASE("outlier count follows the critical index") {
  for (double mu : {0.3, 1.0, -0.8})
    for (int k = 1; k <= 40; ++k)
      for (double z : g_zeros(k, mu)) CHECK(std::fabs(z + mu) <= 4 + 1e-9);
  for (double mu : {1.2, 1.37, 1.5, 2.5}) {
    const int m = critical_index(mu);
    for (int k = 1; k <= 40; ++k) {
      int outside = 0;
      // At mu = (m+1)/m the new zero sits exactly on the edge, which counts as outside.
      for (double z : g_zeros(k, mu)) outside += std::fabs(z + mu) >= 4 - 1e-9;
      CHECK(outside == (k >= m ? 1 : 0));
    }
  }
}

}
