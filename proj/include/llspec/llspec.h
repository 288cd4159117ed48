/* C interface to the lamplighter pencil spectral library. */
#ifndef LLSPEC_LLSPEC_H
#define LLSPEC_LLSPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(LLSPEC_BUILDING_LIBRARY)
#define LLSPEC_API __attribute__((visibility("default")))
#else
#define LLSPEC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum llspec_status {
  LLSPEC_OK = 0,
  LLSPEC_E_DOMAIN = 1,
  LLSPEC_E_CAPACITY = 2,
  LLSPEC_E_CONVERGENCE = 3,
  LLSPEC_E_PARSE = 4,
  LLSPEC_E_NOT_A_ROOT = 5,
  LLSPEC_E_ASSUMPTION = 6,
  LLSPEC_E_ARGUMENT = 7, /* null pointer, buffer too small, bad index */
  LLSPEC_E_INTERNAL = 8
} llspec_status;

/* Atom classes, in the order used by llspec_measure_atom. */
enum {
  LLSPEC_ATOM_GENERIC = 0,
  LLSPEC_ATOM_DELTA_MU = 1,
  LLSPEC_ATOM_B1_MERGED = 2,
  LLSPEC_ATOM_B2_MERGED = 3,
  LLSPEC_ATOM_B3_ENDPOINT = 4
};

typedef struct llspec_mu llspec_mu;
typedef struct llspec_measure llspec_measure;
typedef struct llspec_dos llspec_dos;

LLSPEC_API const char* llspec_version(void);
LLSPEC_API const char* llspec_status_name(llspec_status s);
/* Message for the last failing call on this thread; never NULL. */
LLSPEC_API const char* llspec_last_error(void);
/* Frees strings returned through char** out-parameters. */
LLSPEC_API void llspec_string_free(char* s);

/* mu parameter: "float:0.3", "rat:7/6", "b1:p/q:n", "b2:j/k" or a bare number. */
LLSPEC_API llspec_status llspec_mu_parse(const char* text, llspec_mu** out);
LLSPEC_API llspec_status llspec_mu_from_double(double x, llspec_mu** out);
LLSPEC_API void llspec_mu_free(llspec_mu* mu);
LLSPEC_API double llspec_mu_value(const llspec_mu* mu);
LLSPEC_API llspec_status llspec_mu_to_string(const llspec_mu* mu, char** out);
LLSPEC_API llspec_status llspec_mu_classify_json(const llspec_mu* mu, int k_max, double tol,
                                                 char** out);
LLSPEC_API llspec_status llspec_critical_index(const llspec_mu* mu, int* out);

LLSPEC_API llspec_status llspec_u_eval(int n, double x, double* out);
/* Normalized G_k(lambda, mu) / 2^k. */
LLSPEC_API llspec_status llspec_g_value(int k, double lambda, double mu, double* out);
/* Writes the k zeros of G_k(., mu) in ascending order; cap >= k. */
LLSPEC_API llspec_status llspec_g_zeros(int k, double mu, double* out, size_t cap);
LLSPEC_API llspec_status llspec_pencil_spectrum(double mu, double* band_lo, double* band_hi,
                                                int* has_point, double* point);
LLSPEC_API llspec_status llspec_jstar_isolated(double mu, int* has_point, double* point,
                                               double* mass);

LLSPEC_API int llspec_max_level(void);
/* Phi_n(lambda, mu) as sign and log|.|; sign 0 means an exact zero. */
LLSPEC_API llspec_status llspec_phi_det(int n, double lambda, double mu, int* sign,
                                        double* log_abs);
LLSPEC_API llspec_status llspec_phi_factorized(int n, double lambda, double mu, int* sign,
                                               double* log_abs);
/* All 2^n eigenvalues of M_n(mu), ascending; cap >= 2^n. */
LLSPEC_API llspec_status llspec_dense_eigs(int n, double mu, double* out, size_t cap);

LLSPEC_API llspec_status llspec_measure_new(const llspec_mu* mu, int depth,
                                            llspec_measure** out);
LLSPEC_API void llspec_measure_free(llspec_measure* m);
LLSPEC_API size_t llspec_measure_atom_count(const llspec_measure* m);
/* mass is a "p/q" string to be released with llspec_string_free. */
LLSPEC_API llspec_status llspec_measure_atom(const llspec_measure* m, size_t i,
                                             double* position, char** mass, int* atom_class);
LLSPEC_API llspec_status llspec_measure_tail(const llspec_measure* m, char** out);
/* 1 when atoms plus tail sum to exactly 1. */
LLSPEC_API int llspec_measure_is_normalized(const llspec_measure* m);
LLSPEC_API llspec_status llspec_measure_json(const llspec_measure* m, char** out);
/* Bounds on the integrated density at x, as "p/q" strings. */
LLSPEC_API llspec_status llspec_measure_cdf(const llspec_measure* m, double x, char** lo,
                                            char** hi);

LLSPEC_API llspec_status llspec_atom_mass_exact(const llspec_mu* mu, int atom_class, int index,
                                                char** out);
LLSPEC_API llspec_status llspec_multiplicity(int n, double lambda, const llspec_mu* mu,
                                             int strict, int* out);
LLSPEC_API llspec_status llspec_progression(const llspec_mu* mu, double position, int* k0,
                                            int* step, int* exact);

/* Samples `sites` Bernoulli sites from `seed` and pools interior block spectra.
   workers = 0 uses all cores; the result is independent of it. */
LLSPEC_API llspec_status llspec_dos_run(double mu, size_t sites, uint64_t seed,
                                        unsigned workers, llspec_dos** out);
LLSPEC_API void llspec_dos_free(llspec_dos* d);
LLSPEC_API size_t llspec_dos_site_count(const llspec_dos* d);
LLSPEC_API llspec_status llspec_dos_csv(const llspec_dos* d, char** out);
/* checkpoints <= 0 selects 50. json may be NULL. */
LLSPEC_API llspec_status llspec_dos_compare(const llspec_dos* d, const llspec_measure* m,
                                            int checkpoints, double* deviation, char** json);
LLSPEC_API llspec_status llspec_dos_support(const llspec_dos* d, double eps, size_t* outside,
                                            size_t* unexplained);

/* Gap sequence for m = critical index .. M and the invariant; csv/json may be NULL. */
LLSPEC_API llspec_status llspec_ns_run(double mu, int M, double* decay_rate,
                                       double* closed_form, double* empirical, char** csv,
                                       char** json);

#ifdef __cplusplus
}
#endif

#endif /* LLSPEC_LLSPEC_H */
