#include "llspec/llspec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "llspec/anderson.hpp"
#include "llspec/chebyshev.hpp"
#include "llspec/classify.hpp"
#include "llspec/error.hpp"
#include "llspec/gh_polys.hpp"
#include "llspec/jacobi_spectral.hpp"
#include "llspec/lamplighter_rep.hpp"
#include "llspec/mu_param.hpp"
#include "llspec/novikov_shubin.hpp"
#include "llspec/serialize.hpp"
#include "llspec/spectral_measure.hpp"

struct llspec_mu {
  llspec::MuParam value;
};

struct llspec_measure {
  llspec::AtomicMeasure value;
};

struct llspec_dos {
  llspec::EmpiricalIDS ids;
  std::uint64_t seed = 0;
};

namespace {

thread_local std::string g_last_error;

llspec_status fail(llspec_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <class F>
llspec_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return LLSPEC_OK;
  } catch (const llspec::CapacityError& e) {
    return fail(LLSPEC_E_CAPACITY, e.what());
  } catch (const llspec::ConvergenceError& e) {
    return fail(LLSPEC_E_CONVERGENCE, e.what());
  } catch (const llspec::ParseError& e) {
    return fail(LLSPEC_E_PARSE, e.what());
  } catch (const llspec::NotARootError& e) {
    return fail(LLSPEC_E_NOT_A_ROOT, e.what());
  } catch (const llspec::AssumptionError& e) {
    return fail(LLSPEC_E_ASSUMPTION, e.what());
  } catch (const llspec::DomainError& e) {
    return fail(LLSPEC_E_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LLSPEC_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LLSPEC_E_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}


#define LLSPEC_REQUIRE(cond, msg)                        \
  do {                            \
    if (!(cond)) return fail(LLSPEC_E_ARGUMENT, msg); \
  } while (0)

void put_signed_log(const llspec::SignedLog& v, int* sign, double* log_abs) {
  *sign = v.sign;
  *log_abs = v.log_abs;
}

}  // namespace

extern "C" {

const char* llspec_version(void) { return "0.1.0"; }

const char* llspec_status_name(llspec_status s) {
  switch (s) {
    case LLSPEC_OK: return "ok";
    case LLSPEC_E_DOMAIN: return "domain error";
    case LLSPEC_E_CAPACITY: return "capacity error";
    case LLSPEC_E_CONVERGENCE: return "convergence error";
    case LLSPEC_E_PARSE: return "parse error";
    case LLSPEC_E_NOT_A_ROOT: return "not a root";
    case LLSPEC_E_ASSUMPTION: return "assumption not met";
    case LLSPEC_E_ARGUMENT: return "invalid argument";
    case LLSPEC_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* llspec_last_error(void) { return g_last_error.c_str(); }

void llspec_string_free(char* s) { std::free(s); }

llspec_status llspec_mu_parse(const char* text, llspec_mu** out) {
  LLSPEC_REQUIRE(text && out, "null argument");
  return guarded([&] { *out = new llspec_mu{llspec::MuParam::parse(text)}; });
}

llspec_status llspec_mu_from_double(double x, llspec_mu** out) {
  LLSPEC_REQUIRE(out, "null argument");
  return guarded([&] { *out = new llspec_mu{llspec::MuParam::from_double(x)}; });
}

void llspec_mu_free(llspec_mu* mu) { delete mu; }

double llspec_mu_value(const llspec_mu* mu) { return mu ? mu->value.value() : 0.0; }

llspec_status llspec_mu_to_string(const llspec_mu* mu, char** out) {
  LLSPEC_REQUIRE(mu && out, "null argument");
  return guarded([&] { *out = dup_string(mu->value.to_string()); });
}

llspec_status llspec_mu_classify_json(const llspec_mu* mu, int k_max, double tol, char** out) {
  LLSPEC_REQUIRE(mu && out, "null argument");
  return guarded([&] {
    const auto c = llspec::classify_mu(mu->value, k_max > 0 ? k_max : 30, tol > 0 ? tol : 1e-9);
    *out = dup_string(llspec::classification_to_json(mu->value, c));
  });
}

llspec_status llspec_critical_index(const llspec_mu* mu, int* out) {
  LLSPEC_REQUIRE(mu && out, "null argument");
  return guarded([&] {
    if (auto q = mu->value.exact())
      *out = llspec::critical_index(*q);
    else
      *out = llspec::critical_index(mu->value.value());
  });
}

llspec_status llspec_u_eval(int n, double x, double* out) {
  LLSPEC_REQUIRE(out && n >= 0, "invalid argument");
  return guarded([&] { *out = llspec::u_eval(n, x); });
}

llspec_status llspec_g_value(int k, double lambda, double mu, double* out) {
  LLSPEC_REQUIRE(out && k >= 1, "invalid argument");
  return guarded([&] { *out = llspec::g_value(k, lambda, mu); });
}

llspec_status llspec_g_zeros(int k, double mu, double* out, size_t cap) {
  LLSPEC_REQUIRE(out && k >= 1, "invalid argument");
  LLSPEC_REQUIRE(cap >= static_cast<size_t>(k), "output buffer too small");
  return guarded([&] {
    const auto z = llspec::g_zeros(k, mu);
    std::copy(z.begin(), z.end(), out);
  });
}

llspec_status llspec_pencil_spectrum(double mu, double* band_lo, double* band_hi, int* has_point,
                                     double* point) {
  LLSPEC_REQUIRE(band_lo && band_hi && has_point && point, "null argument");
  return guarded([&] {
    const auto s = llspec::pencil_spectrum(mu);
    *band_lo = s.band_lo;
    *band_hi = s.band_hi;
    *has_point = s.isolated.has_value();
    *point = s.isolated.value_or(0.0);
  });
}

llspec_status llspec_jstar_isolated(double mu, int* has_point, double* point, double* mass) {
  LLSPEC_REQUIRE(has_point && point && mass, "null argument");
  return guarded([&] {
    const auto p = llspec::isolated_eigenvalue(mu);
    *has_point = p.has_value();
    *point = p.value_or(0.0);
    *mass = llspec::isolated_mass(mu);
  });
}

int llspec_max_level(void) { return llspec::default_max_level(); }

llspec_status llspec_phi_det(int n, double lambda, double mu, int* sign, double* log_abs) {
  LLSPEC_REQUIRE(sign && log_abs && n >= 0, "invalid argument");
  return guarded([&] { put_signed_log(llspec::phi_det(n, lambda, mu), sign, log_abs); });
}

llspec_status llspec_phi_factorized(int n, double lambda, double mu, int* sign, double* log_abs) {
  LLSPEC_REQUIRE(sign && log_abs && n >= 0, "invalid argument");
  return guarded([&] { put_signed_log(llspec::phi_factorized(n, lambda, mu), sign, log_abs); });
}

llspec_status llspec_dense_eigs(int n, double mu, double* out, size_t cap) {
  LLSPEC_REQUIRE(out && n >= 0 && n < 31, "invalid argument");
  LLSPEC_REQUIRE(cap >= (size_t{1} << n), "output buffer too small");
  return guarded([&] {
    const auto rep = llspec::build_level(n);
    const auto ev = llspec::dense_eigs(llspec::pencil_matrix(rep, mu));
    std::copy(ev.begin(), ev.end(), out);
  });
}

llspec_status llspec_measure_new(const llspec_mu* mu, int depth, llspec_measure** out) {
  LLSPEC_REQUIRE(mu && out, "null argument");
  return guarded([&] { *out = new llspec_measure{llspec::measure_truncation(mu->value, depth)}; });
}

void llspec_measure_free(llspec_measure* m) { delete m; }

size_t llspec_measure_atom_count(const llspec_measure* m) { return m ? m->value.atoms.size() : 0; }

llspec_status llspec_measure_atom(const llspec_measure* m, size_t i, double* position,
                                  char** mass, int* atom_class) {
  LLSPEC_REQUIRE(m && position && mass && atom_class, "null argument");
  LLSPEC_REQUIRE(i < m->value.atoms.size(), "atom index out of range");
  return guarded([&] {
    const auto& a = m->value.atoms[i];
    *position = a.position;
    *atom_class = static_cast<int>(a.cls);
    *mass = dup_string(llspec::format_rational(a.mass));
  });
}

llspec_status llspec_measure_tail(const llspec_measure* m, char** out) {
  LLSPEC_REQUIRE(m && out, "null argument");
  return guarded([&] { *out = dup_string(llspec::format_rational(m->value.tail_mass)); });
}

int llspec_measure_is_normalized(const llspec_measure* m) {
  return m && m->value.total_mass() == 1 ? 1 : 0;
}

llspec_status llspec_measure_json(const llspec_measure* m, char** out) {
  LLSPEC_REQUIRE(m && out, "null argument");
  return guarded([&] { *out = dup_string(llspec::measure_to_json(m->value)); });
}

llspec_status llspec_measure_cdf(const llspec_measure* m, double x, char** lo, char** hi) {
  LLSPEC_REQUIRE(m && lo && hi, "null argument");
  return guarded([&] {
    const auto [a, b] = llspec::ids_cdf(m->value, x);
    *lo = dup_string(llspec::format_rational(a));
    try {
      *hi = dup_string(llspec::format_rational(b));
    } catch (...) {
      std::free(*lo);
      *lo = nullptr;
      throw;
    }
  });
}

llspec_status llspec_atom_mass_exact(const llspec_mu* mu, int atom_class, int index, char** out) {
  LLSPEC_REQUIRE(mu && out, "null argument");
  LLSPEC_REQUIRE(atom_class >= LLSPEC_ATOM_GENERIC && atom_class <= LLSPEC_ATOM_B3_ENDPOINT,
                 "unknown atom class");
  return guarded([&] {
    const auto q = llspec::atom_mass_exact(mu->value, static_cast<llspec::AtomClass>(atom_class),
                                           index);
    *out = dup_string(llspec::format_rational(q));
  });
}

llspec_status llspec_multiplicity(int n, double lambda, const llspec_mu* mu, int strict,
                                  int* out) {
  LLSPEC_REQUIRE(mu && out, "null argument");
  return guarded([&] { *out = llspec::multiplicity_in_phi(n, lambda, mu->value, strict != 0); });
}

llspec_status llspec_progression(const llspec_mu* mu, double position, int* k0, int* step,
                                 int* exact) {
  LLSPEC_REQUIRE(mu && k0 && step && exact, "null argument");
  return guarded([&] {
    const auto p = llspec::arithmetic_progression_indices(mu->value, position);
    *k0 = p.k0;
    *step = p.step;
    *exact = p.exact;
  });
}

llspec_status llspec_dos_run(double mu, size_t sites, uint64_t seed, unsigned workers,
                             llspec_dos** out) {
  LLSPEC_REQUIRE(out && sites >= 2, "invalid argument");
  return guarded([&] {
    const auto w = llspec::sample_window(seed, 0, sites);
    const auto s = llspec::build_jacobi_sample(w, mu);
    *out = new llspec_dos{llspec::empirical_ids({s}, workers), seed};
  });
}

void llspec_dos_free(llspec_dos* d) { delete d; }

size_t llspec_dos_site_count(const llspec_dos* d) { return d ? d->ids.site_count : 0; }

llspec_status llspec_dos_csv(const llspec_dos* d, char** out) {
  LLSPEC_REQUIRE(d && out, "null argument");
  return guarded([&] { *out = dup_string(llspec::ids_to_csv(d->ids)); });
}

llspec_status llspec_dos_compare(const llspec_dos* d, const llspec_measure* m, int checkpoints,
                                 double* deviation, char** json) {
  LLSPEC_REQUIRE(d && m && deviation, "null argument");
  return guarded([&] {
    const auto pts = llspec::default_checkpoints(m->value, checkpoints > 0 ? checkpoints : 50);
    const auto c = llspec::compare_ids(d->ids, m->value, pts);
    *deviation = c.sup_deviation;
    if (json)
      *json = dup_string(
          llspec::comparison_to_json(c, d->ids.mu, d->ids.site_count, d->seed, m->value.depth));
  });
}

llspec_status llspec_dos_support(const llspec_dos* d, double eps, size_t* outside,
                                 size_t* unexplained) {
  LLSPEC_REQUIRE(d && outside && unexplained, "null argument");
  return guarded([&] {
    const auto r = llspec::support_check(d->ids, eps > 0 ? eps : 1e-6);
    *outside = r.outside_band;
    *unexplained = r.unexplained;
  });
}

llspec_status llspec_ns_run(double mu, int M, double* decay_rate, double* closed_form,
                            double* empirical, char** csv, char** json) {
  LLSPEC_REQUIRE(decay_rate && closed_form && empirical, "null argument");
  return guarded([&] {
    const auto seq = llspec::gap_sequence(mu, M);
    const auto inv = llspec::ns_invariant(mu, M);
    *decay_rate = llspec::decay_rate(seq);
    *closed_form = inv.closed_form;
    *empirical = inv.empirical;
    if (csv) *csv = dup_string(llspec::gaps_to_csv(seq));
    if (json) *json = dup_string(llspec::ns_to_json(seq, inv, *decay_rate));
  });
}

}  // extern "C"
