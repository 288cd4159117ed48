#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "llspec/classify.hpp"
#include "llspec/error.hpp"
#include "llspec/gh_polys.hpp"
#include "llspec/lamplighter_rep.hpp"
#include "llspec/mu_param.hpp"
#include "llspec/spectral_measure.hpp"

using namespace llspec;

namespace {

mpq_class Q(long p, long q) {
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

// Independent series: sum_{k>=1} k 2^-(k+1) truncated at K.
mpq_class series_mass(int K) {
  mpq_class s;
  for (int k = 1; k <= K; ++k) s += mpq_class(k) * pow2_inv(k + 1);
  return s;
}

const Atom* atom_near(const AtomicMeasure& m, double x) {
  for (const auto& a : m.atoms)
    if (std::fabs(a.position - x) < 1e-8) return &a;
  return nullptr;
}

}  // namespace

TEST_SUITE("spectral_measure") {

TEST_CASE("mu parsing and round trip") {
  for (const char* s : {"float:0.29999999999999999", "rat:7/6", "rat:-3/2", "b1:1/2:1", "b1:2/5:3", "b2:1/2"}) {
    const auto m = MuParam::parse(s);
    CHECK(m.to_string() == s);
    CHECK(MuParam::parse(m.to_string()).value() == m.value());
  }
  CHECK(MuParam::parse("0.3").value() == 0.3);
  CHECK(MuParam::parse("rat:2").to_string() == "rat:2/1");
  CHECK(MuParam::parse("rat:14/12").to_string() == "rat:7/6");
  CHECK(MuParam::parse("b2:1/2").value() == doctest::Approx(1.0));
  CHECK(MuParam::parse("b1:1/2:1").value() == doctest::Approx(0.0).scale(1.0));
  CHECK(*MuParam::parse("rat:7/6").exact() == Q(7, 6));
  CHECK_FALSE(MuParam::parse("b2:1/2").exact().has_value());
  for (const char* bad : {"", "rat:1/0", "b1:2/4:1", "b1:1/3:3", "b2:3/2", "quux:1", "float:abc", "rat:1/2/3", "nan"})
    CHECK_THROWS_AS(MuParam::parse(bad), ParseError);
}

TEST_CASE("classification examples") {
  auto c = classify_mu(MuParam::parse("rat:7/6"));
  CHECK(c.b3.member);
  CHECK(c.b3.exact);
  CHECK(c.b3_k == 6);
  CHECK_FALSE(c.b2.member);

  c = classify_mu(MuParam::b2(1, 2));
  CHECK(c.b2.member);
  CHECK(c.b2.exact);
  CHECK(c.b2_k == 2);
  CHECK(c.b1.member);
  CHECK_FALSE(c.b3.member);

  c = classify_mu(MuParam::rational(0, 1));
  CHECK(c.b1.member);
  CHECK(c.b1.exact);
  REQUIRE(c.b1_witness);
  CHECK(c.b1_witness->p == 1);
  CHECK(c.b1_witness->q == 2);
  CHECK(c.b1_witness->n == 1);
  CHECK(std::fabs(c.b1_witness->position) < 1e-15);
  CHECK_FALSE(c.b3.member);

  c = classify_mu(MuParam::rational(-1, 1));
  CHECK(c.b2_k == 2);
  CHECK(c.b1_witness->q == 3);

  c = classify_mu(MuParam::b2(2, 5));  // 2cos(pi/3) = 1, so k = 2
  CHECK(c.b2_k == 2);
  CHECK(b2_minimal_k(3, 5) == 1);

  c = classify_mu(MuParam::b1(2, 5, 8));
  CHECK(c.b1.exact);
  CHECK(c.b1_witness->n == 3);
  CHECK(g_value(3, c.b1_witness->position, c.b1.member ? MuParam::b1(2, 5, 8).value() : 0) ==
        doctest::Approx(0.0).scale(1.0));

  c = classify_mu(MuParam::from_double(0.3));
  CHECK(c.heuristic());
  CHECK_FALSE(c.b2.member);
  CHECK_FALSE(c.b3.member);

  c = classify_mu(MuParam::from_double(1.5));
  CHECK(c.b3.member);
  CHECK_FALSE(c.b3.exact);
  CHECK(c.b3_k == 2);
}

TEST_CASE("heuristic scan finds B1 collisions for a float") {
  const double mu = MuParam::b1(2, 5, 3).value();
  const auto c = classify_mu(MuParam::from_double(mu));
  CHECK(c.b1.member);
  CHECK_FALSE(c.b1.exact);
  REQUIRE(c.b1_witness);
  const auto& w = *c.b1_witness;
  CHECK(w.n <= 3);
  CHECK(std::fabs(g_value(w.n, w.position, mu)) < 1e-8);
  CHECK(std::fabs(g_value(w.n + w.q, w.position, mu)) < 1e-8);
  CHECK(std::cos(std::numbers::pi * w.p / w.q) == doctest::Approx((-w.position - mu) / 4));
}

TEST_CASE("measure truncation examples") {
  const auto m = measure_truncation(MuParam::from_double(0.3), 9);
  const Atom* a = atom_near(m, 0.3);
  REQUIRE(a);
  CHECK(a->mass == Q(1, 4));
  CHECK(a->cls == AtomClass::delta_mu);

  const auto z = measure_truncation(MuParam::rational(0, 1), 7);
  const Atom* b = atom_near(z, 0.0);
  REQUIRE(b);
  CHECK(b->mass == Q(85, 256));
  CHECK(b->indices == std::vector<int>{1, 3, 5, 7});
  CHECK(b->cls == AtomClass::B2_merged);

  const auto e = measure_truncation(MuParam::rational(3, 2), 6);
  const Atom* c = atom_near(e, 2.5);
  REQUIRE(c);
  CHECK(c->cls == AtomClass::B3_endpoint);
  CHECK(c->mass == Q(1, 8));
}

TEST_CASE("crowded outliers are not labelled as collisions") {
  const auto m = measure_truncation(MuParam::rational(3, 1), 20);
  const Atom& top = m.atoms.back();
  CHECK(top.position == doctest::Approx(3 + 2.0 / 3));
  CHECK(top.indices.size() > 1);
  CHECK(top.cls == AtomClass::generic);
}

TEST_CASE("exact normalization") {
  for (const char* s : {"float:0.3", "rat:0/1", "rat:1", "rat:7/6", "b1:2/5:3", "float:-2.4", "b2:3/7"})
    for (int K : {1, 2, 5, 11, 20}) {
      const auto m = measure_truncation(MuParam::parse(s), K);
      CHECK(m.total_mass() == 1);
      CHECK(m.tail_mass == truncation_tail(K));
      CHECK(1 - m.tail_mass == series_mass(K));
      for (std::size_t i = 1; i < m.atoms.size(); ++i)
        CHECK(m.atoms[i].position - m.atoms[i - 1].position > default_coalesce_tol(m.mu.value()));
    }
  CHECK(truncation_tail(3) == Q(5, 16));
  CHECK_THROWS_AS(measure_truncation(MuParam(), 0), DomainError);
}

TEST_CASE("closed-form atom masses") {
  CHECK(atom_mass_exact(MuParam::rational(0, 1), AtomClass::B1_merged) == Q(1, 3));
  CHECK(atom_mass_exact(MuParam::rational(1, 1), AtomClass::B2_merged) == Q(2, 7));
  CHECK(atom_mass_exact(MuParam::b2(1, 2), AtomClass::B2_merged) == Q(2, 7));
  CHECK(atom_mass_exact(MuParam::rational(3, 2), AtomClass::B3_endpoint) == Q(1, 8));
  CHECK(atom_mass_exact(MuParam::from_double(0.3), AtomClass::generic, 4) == Q(1, 32));
  CHECK(atom_mass_exact(MuParam::from_double(0.3), AtomClass::delta_mu) == Q(1, 4));
  // Both closed forms agree where B1 and B2 overlap.
  for (int k = 1; k < 8; ++k)
    for (int j = 1; j <= k; ++j) {
      const auto mu = MuParam::b2(j, k);
      CHECK(atom_mass_exact(mu, AtomClass::B1_merged) == atom_mass_exact(mu, AtomClass::B2_merged));
    }
  CHECK_THROWS_AS(atom_mass_exact(MuParam::from_double(0.0), AtomClass::B1_merged), AssumptionError);
  CHECK_THROWS_AS(atom_mass_exact(MuParam::from_double(1.5), AtomClass::B3_endpoint), AssumptionError);
  CHECK_THROWS_AS(atom_mass_exact(MuParam::from_double(0.3), AtomClass::generic), AssumptionError);
}

TEST_CASE("partial sums approach the closed forms") {
  // mu = 0, atom 0: 1/4, 5/16, 21/64, ... with error below 4^-m.
  for (int m = 1; m <= 10; ++m) {
    const auto meas = measure_truncation(MuParam::rational(0, 1), 2 * m - 1);
    const Atom* a = atom_near(meas, 0.0);
    REQUIRE(a);
    const mpq_class err = Q(1, 3) - a->mass;
    CHECK(err > 0);
    CHECK(err < pow2_inv(2 * m));
  }
  for (const char* s : {"rat:1", "b2:1/3", "b2:2/4", "b1:2/5:2", "b1:1/4:3"}) {
    const auto mu = MuParam::parse(s);
    const auto c = classify_mu(mu);
    const auto meas = measure_truncation(mu, 40);
    const bool b2 = c.b2.member && c.b2.exact;
    const double pos = b2 ? mu.value() : c.b1_witness->position;
    const Atom* a = atom_near(meas, pos);
    REQUIRE(a);
    const auto target = atom_mass_exact(mu, b2 ? AtomClass::B2_merged : AtomClass::B1_merged);
    CHECK(std::fabs(mpq_class(target - a->mass).get_d()) < 1e-10);
  }
}

TEST_CASE("B2 progression start reproduces the limiting mass") {
  for (int k = 1; k <= 6; ++k) {
    // indices 1, k+2, 2k+3, ... summed geometrically
    mpq_class s = Q(1, 4);
    for (int i = k + 2; i <= 200; i += k + 1) s += pow2_inv(i + 1);
    const mpq_class target = Q(1, 4) + mpq_class(1) / (4 * (mpq_class(mpz_class(1) << (k + 1)) - 1));
    CHECK(std::fabs(mpq_class(s - target).get_d()) < 1e-50);
  }
  // mu = 1: G_4, G_7, G_10 vanish at lambda = 1, nothing in between does.
  for (int j = 2; j <= 20; ++j) {
    const bool vanishes = std::fabs(g_value(j, 1.0, 1.0)) < 1e-9;
    CHECK(vanishes == ((j - 1) % 3 == 0));
  }
}

TEST_CASE("multiplicity examples") {
  CHECK(multiplicity_in_phi(6, 2.0, MuParam::rational(2, 1)) == 17);
  CHECK(multiplicity_in_phi(6, 1.0, MuParam::rational(1, 1)) == 18);
  CHECK(multiplicity_in_phi(6, 1.0, MuParam::b2(1, 2)) == 18);
  CHECK(multiplicity_in_phi(4, 4 - 0.3, MuParam::from_double(0.3)) == 1);
  CHECK(multiplicity_in_phi(6, 2.5, MuParam::rational(3, 2)) == 9);
  CHECK(multiplicity_in_phi(2, 2.5, MuParam::rational(3, 2)) == 2);
  CHECK(multiplicity_in_phi(1, 2.5, MuParam::rational(3, 2)) == 1);
  // G_4(1,1) = 0 breaks the closed-form assumption.
  CHECK_THROWS_AS(multiplicity_in_phi(4, 1.0, MuParam::rational(1, 1)), AssumptionError);
  CHECK(multiplicity_in_phi(4, 1.0, MuParam::rational(1, 1), false) == 5);
  CHECK_THROWS_AS(multiplicity_in_phi(4, 0.123, MuParam::from_double(0.3)), NotARootError);
}

TEST_CASE("multiplicities match dense eigenvalue clusters") {
  for (const char* s : {"rat:0", "float:0.3", "rat:1", "rat:3/2", "rat:2"}) {
    const auto mu = MuParam::parse(s);
    for (int n = 1; n <= 6; ++n) {
      const auto ev = dense_eigs(pencil_matrix(build_level(n), mu.value()));
      std::size_t i = 0;
      int total = 0;
      while (i < ev.size()) {
        std::size_t j = i + 1;
        while (j < ev.size() && ev[j] - ev[j - 1] <= 1e-7) ++j;
        const int count = static_cast<int>(j - i);
        const int mult = multiplicity_in_phi(n, ev[i], mu, false);
        CHECK_MESSAGE(mult == count, s << " n=" << n << " lambda=" << ev[i]);
        total += count;
        i = j;
      }
      CHECK(total == (1 << n));
    }
  }
}

TEST_CASE("ids_cdf bounds") {
  const auto m = measure_truncation(MuParam::from_double(0.3), 10);
  auto [lo, hi] = ids_cdf(m, -4.3 - 1e-6);
  CHECK(lo == 0);
  CHECK(hi == m.tail_mass);
  std::tie(lo, hi) = ids_cdf(m, 1e9);
  CHECK(lo == 1 - m.tail_mass);
  CHECK(hi == 1);
  const auto z = measure_truncation(MuParam::rational(0, 1), 9);
  std::tie(lo, hi) = ids_cdf(z, 0.0);
  CHECK(lo >= Q(1, 2) - z.tail_mass);
  // Symmetry of nu_0: N(-x) + N(x) - nu({x}) = 1 up to the tail.
  const auto [a, b] = ids_cdf(z, -1.3);
  const auto [c, d] = ids_cdf(z, 1.3 - 1e-12);
  CHECK(std::fabs(mpq_class(a + c - 1).get_d()) <= z.tail_mass.get_d());
}

TEST_CASE("arithmetic progressions of indices") {
  auto p = arithmetic_progression_indices(MuParam::rational(0, 1), 0.0);
  CHECK(p.k0 == 1);
  CHECK(p.step == 2);
  CHECK(p.exact);
  p = arithmetic_progression_indices(MuParam::rational(1, 1), 1.0);
  CHECK(p.k0 == 1);
  CHECK(p.step == 3);
  const auto mu = MuParam::from_double(0.3);
  const double z = g_zeros(5, 0.3)[2];
  p = arithmetic_progression_indices(mu, z);
  CHECK(p.k0 == 5);
  CHECK(p.step == 0);
  // mu = 0, atom 2 = -4cos(2pi/3): indices 2, 5, 8, ...
  p = arithmetic_progression_indices(MuParam::rational(0, 1), 2.0);
  CHECK(p.k0 == 2);
  CHECK(p.step == 3);
}

TEST_CASE("generic mu has disjoint in-band zero sets") {
  // Outlier zeros (|mu| > 1) are distinct but approach mu + 2/mu geometrically.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int t = 0; t < 5; ++t) {
    const double mu = U(rng);
    std::vector<double> all;
    for (int k = 1; k <= 15; ++k)
      for (double z : g_zeros(k, mu))
        if (std::fabs(z + mu) <= 4) all.push_back(z);
    std::sort(all.begin(), all.end());
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i] - all[i - 1] > 1e-7);
  }
}

}
