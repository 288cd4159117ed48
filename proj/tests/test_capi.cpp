#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "llspec/llspec.h"

namespace {

std::string take(char* s) {
  std::string r = s ? s : "";
  llspec_string_free(s);
  return r;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("mu handles") {
  llspec_mu* mu = nullptr;
  REQUIRE(llspec_mu_parse("rat:7/6", &mu) == LLSPEC_OK);
  CHECK(llspec_mu_value(mu) == doctest::Approx(7.0 / 6));
  char* s = nullptr;
  REQUIRE(llspec_mu_to_string(mu, &s) == LLSPEC_OK);
  CHECK(take(s) == "rat:7/6");
  int m = 0;
  REQUIRE(llspec_critical_index(mu, &m) == LLSPEC_OK);
  CHECK(m == 6);
  REQUIRE(llspec_mu_classify_json(mu, 0, 0, &s) == LLSPEC_OK);
  CHECK(take(s).find("\"B3\"") != std::string::npos);
  llspec_mu_free(mu);

  llspec_mu* bad = nullptr;
  CHECK(llspec_mu_parse("rat:1/0", &bad) == LLSPEC_E_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::strlen(llspec_last_error()) > 0);
  CHECK(llspec_mu_parse(nullptr, &bad) == LLSPEC_E_ARGUMENT);
  CHECK(std::string(llspec_status_name(LLSPEC_E_CAPACITY)) == "capacity error");
}

TEST_CASE("scalar functions") {
  double v = 0;
  REQUIRE(llspec_u_eval(3, 1.0, &v) == LLSPEC_OK);
  CHECK(v == 4.0);
  REQUIRE(llspec_g_value(2, 0, 0, &v) == LLSPEC_OK);
  CHECK(v == doctest::Approx(-1.0));
  std::vector<double> z(2);
  REQUIRE(llspec_g_zeros(2, 0.0, z.data(), z.size()) == LLSPEC_OK);
  CHECK(z[0] == doctest::Approx(-2.0));
  CHECK(llspec_g_zeros(3, 0.0, z.data(), z.size()) == LLSPEC_E_ARGUMENT);

  double lo, hi, pt, mass;
  int has;
  REQUIRE(llspec_pencil_spectrum(2.0, &lo, &hi, &has, &pt) == LLSPEC_OK);
  CHECK(has == 1);
  CHECK(pt == doctest::Approx(3.0));
  REQUIRE(llspec_jstar_isolated(2.0, &has, &pt, &mass) == LLSPEC_OK);
  CHECK(mass == doctest::Approx(0.75));

  int sign;
  double la;
  REQUIRE(llspec_phi_det(1, 1, 2, &sign, &la) == LLSPEC_OK);
  CHECK(sign == 1);
  CHECK(std::fabs(la) < 1e-12);
  CHECK(llspec_phi_det(40, 0, 0, &sign, &la) == LLSPEC_E_CAPACITY);
  REQUIRE(llspec_phi_factorized(3, 1, 1, &sign, &la) == LLSPEC_OK);
  CHECK(sign == 0);

  std::vector<double> ev(4);
  REQUIRE(llspec_dense_eigs(2, 0.0, ev.data(), ev.size()) == LLSPEC_OK);
  CHECK(ev[3] == doctest::Approx(4.0));
}

TEST_CASE("measure handles") {
  llspec_mu* mu = nullptr;
  REQUIRE(llspec_mu_parse("rat:0", &mu) == LLSPEC_OK);
  llspec_measure* m = nullptr;
  REQUIRE(llspec_measure_new(mu, 7, &m) == LLSPEC_OK);
  CHECK(llspec_measure_is_normalized(m) == 1);
  bool found = false;
  for (size_t i = 0; i < llspec_measure_atom_count(m); ++i) {
    double pos;
    char* mass;
    int cls;
    REQUIRE(llspec_measure_atom(m, i, &pos, &mass, &cls) == LLSPEC_OK);
    const std::string ms = take(mass);
    if (std::fabs(pos) < 1e-12) {
      found = true;
      CHECK(ms == "85/256");
      CHECK(cls == LLSPEC_ATOM_B2_MERGED);
    }
  }
  CHECK(found);
  char* s = nullptr;
  REQUIRE(llspec_measure_tail(m, &s) == LLSPEC_OK);
  CHECK(take(s) == "9/256");
  REQUIRE(llspec_measure_json(m, &s) == LLSPEC_OK);
  CHECK(take(s).find("\"tail_mass\": \"9/256\"") != std::string::npos);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(llspec_measure_cdf(m, 1e9, &a, &b) == LLSPEC_OK);
  CHECK(take(a) == "247/256");
  CHECK(take(b) == "1");
  CHECK(llspec_measure_atom(m, 100000, nullptr, nullptr, nullptr) == LLSPEC_E_ARGUMENT);

  REQUIRE(llspec_atom_mass_exact(mu, LLSPEC_ATOM_B1_MERGED, 0, &s) == LLSPEC_OK);
  CHECK(take(s) == "1/3");
  int k0, step, exact;
  REQUIRE(llspec_progression(mu, 0.0, &k0, &step, &exact) == LLSPEC_OK);
  CHECK(k0 == 1);
  CHECK(step == 2);
  llspec_measure_free(m);
  llspec_mu_free(mu);

  REQUIRE(llspec_mu_parse("rat:1", &mu) == LLSPEC_OK);
  int mult = 0;
  REQUIRE(llspec_multiplicity(6, 1.0, mu, 1, &mult) == LLSPEC_OK);
  CHECK(mult == 18);
  CHECK(llspec_multiplicity(4, 1.0, mu, 1, &mult) == LLSPEC_E_ASSUMPTION);
  CHECK(llspec_multiplicity(4, 0.77, mu, 1, &mult) == LLSPEC_E_NOT_A_ROOT);
  REQUIRE(llspec_atom_mass_exact(mu, LLSPEC_ATOM_B2_MERGED, 0, &s) == LLSPEC_OK);
  CHECK(take(s) == "2/7");
  llspec_mu_free(mu);
}

TEST_CASE("density of states and gaps") {
  llspec_dos* d = nullptr;
  REQUIRE(llspec_dos_run(0.3, 20000, 5, 2, &d) == LLSPEC_OK);
  CHECK(llspec_dos_site_count(d) > 19000);
  llspec_mu* mu = nullptr;
  REQUIRE(llspec_mu_from_double(0.3, &mu) == LLSPEC_OK);
  llspec_measure* m = nullptr;
  REQUIRE(llspec_measure_new(mu, 12, &m) == LLSPEC_OK);
  double dev = 1;
  char* js = nullptr;
  REQUIRE(llspec_dos_compare(d, m, 0, &dev, &js) == LLSPEC_OK);
  CHECK(dev < 0.03);
  CHECK(take(js).find("sup_deviation") != std::string::npos);
  size_t out = 9, unexpl = 9;
  REQUIRE(llspec_dos_support(d, 1e-6, &out, &unexpl) == LLSPEC_OK);
  CHECK(out == 0);
  char* csv = nullptr;
  REQUIRE(llspec_dos_csv(d, &csv) == LLSPEC_OK);
  CHECK(take(csv).rfind("eigenvalue,cumulative_weight\n", 0) == 0);
  llspec_measure_free(m);
  llspec_mu_free(mu);
  llspec_dos_free(d);

  double rate, closed, emp;
  char* gaps = nullptr;
  REQUIRE(llspec_ns_run(2.0, 60, &rate, &closed, &emp, &gaps, nullptr) == LLSPEC_OK);
  CHECK(closed == 0.5);
  CHECK(rate == doctest::Approx(0.25).epsilon(0.02));
  CHECK(take(gaps).rfind("m,x_m,gap,log2_gap\n", 0) == 0);
  CHECK(llspec_ns_run(0.5, 60, &rate, &closed, &emp, nullptr, nullptr) == LLSPEC_E_DOMAIN);
}

}
