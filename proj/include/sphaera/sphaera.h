/* sphaera: isotropic Gaussian random fields on the unit sphere, subordinated
 * diffusion semigroups, subordinate spherical Brownian motion, and the
 * statistical verification battery tying them together.
 *
 * C interface over the C++ core: opaque handles, status codes, and a
 * thread-local error message.  Every function that can fail returns
 * sphaera_status; outputs are written only on SPHAERA_OK.
 */
#ifndef SPHAERA_H
#define SPHAERA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sphaera_status {
  SPHAERA_OK = 0,
  SPHAERA_ERR_INVALID_ARGUMENT = 1, /* precondition or parse failure */
  SPHAERA_ERR_DOMAIN = 2,           /* argument outside a function's domain */
  SPHAERA_ERR_IO = 3,               /* file missing, malformed, or unwritable */
  SPHAERA_ERR_NUMERIC = 4,          /* quadrature/series failed to converge */
  SPHAERA_ERR_INTERNAL = 5
} sphaera_status;

/* Library version string, e.g. "0.1.0". */
const char* sphaera_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
const char* sphaera_last_error(void);

/* Cap on worker threads for internal parallel loops; 0 restores the
 * hardware default.  Results never depend on this value. */
void sphaera_set_max_threads(int n);

/* Frees strings returned through char** outputs. */
void sphaera_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Angular power spectra                                               */

typedef struct sphaera_spectrum sphaera_spectrum;
typedef struct sphaera_psi sphaera_psi;

/* spec: "power:A=<amp>,gamma=<decay>" (decay > 2) or
 *       "damped:A=<amp>,theta=<decay>,nu=<nu>,c=<c>". */
sphaera_status sphaera_spectrum_parse(const char* spec, int bandlimit, sphaera_spectrum** out);
sphaera_status sphaera_spectrum_read(const char* path, sphaera_spectrum** out);
sphaera_status sphaera_spectrum_write(const sphaera_spectrum* s, const char* path,
                                      const char* comment /* nullable */);
int sphaera_spectrum_bandlimit(const sphaera_spectrum* s);
sphaera_status sphaera_spectrum_value(const sphaera_spectrum* s, int l, double* out);
/* Truncated sum_l (2l+1)/(4pi) C_l and the parametric tail estimate. */
sphaera_status sphaera_field_variance(const sphaera_spectrum* s, double* value, double* tail);
/* C_l exp(-2 t Psi(l(l+1))) as a tabulated spectrum. */
sphaera_status sphaera_effective_spectrum(const sphaera_spectrum* s, const sphaera_psi* psi,
                                          double t, sphaera_spectrum** out);
void sphaera_spectrum_free(sphaera_spectrum* s);

/* ------------------------------------------------------------------ */
/* Subordinator Laplace exponents                                      */

/* spec: "stable:alpha=A" | "stable-drift:b=B,alpha=A" | "gamma" |
 *       "geostable:alpha=A" | "sum:c=C,alpha=A,d=D,beta=B";
 * alpha, beta in (0, 1], b, c, d >= 0. */
sphaera_status sphaera_psi_parse(const char* spec, sphaera_psi** out);
sphaera_status sphaera_psi_spec_string(const sphaera_psi* p, char** out);
sphaera_status sphaera_psi_eval(const sphaera_psi* p, double mu, double* out);
sphaera_status sphaera_psi_prime(const sphaera_psi* p, double mu, double* out);
/* Psi recomputed from its Levy density by quadrature (kinds with a listed
 * density only); agrees with sphaera_psi_eval to ~1e-6 relative. */
sphaera_status sphaera_psi_from_levy(const sphaera_psi* p, double mu, double* out);
void sphaera_psi_free(sphaera_psi* p);

/* Monte Carlo check of E exp(-mu D_t) against exp(-t Psi(mu)). */
sphaera_status sphaera_laplace_check(const sphaera_psi* p, double t, double mu, int n,
                                     uint64_t seed, double* analytic, double* estimate,
                                     double* std_error, double* z_score);

/* ------------------------------------------------------------------ */
/* Harmonic coefficients and grid maps                                 */

typedef struct sphaera_coeffs sphaera_coeffs;
typedef struct sphaera_map sphaera_map;

/* Draw a_{lm} of a centered isotropic Gaussian field with the given
 * spectrum (deterministic in the seed). */
sphaera_status sphaera_sample_field(const sphaera_spectrum* s, uint64_t seed,
                                    sphaera_coeffs** out);
sphaera_status sphaera_coeffs_read(const char* path, sphaera_coeffs** out);
sphaera_status sphaera_coeffs_write(const sphaera_coeffs* c, const char* path,
                                    const char* comment /* nullable */);
int sphaera_coeffs_bandlimit(const sphaera_coeffs* c);
/* Stored entries have m >= 0; m < 0 follows from the reality constraint. */
sphaera_status sphaera_coeffs_get(const sphaera_coeffs* c, int l, int m, double* re, double* im);
/* Pointwise field value at (theta, phi). */
sphaera_status sphaera_evaluate(const sphaera_coeffs* c, double theta, double phi, double* out);
/* Chat_l = (2l+1)^{-1} sum_m |a_lm|^2, as a tabulated spectrum. */
sphaera_status sphaera_estimate_spectrum(const sphaera_coeffs* c, sphaera_spectrum** out);
/* a_{lm} *= exp(-t Psi(l(l+1))). */
sphaera_status sphaera_evolve(const sphaera_coeffs* c, const sphaera_psi* p, double t,
                              sphaera_coeffs** out);
/* a_{lm} *= -Psi(l(l+1)). */
sphaera_status sphaera_generator(const sphaera_coeffs* c, const sphaera_psi* p,
                                 sphaera_coeffs** out);
void sphaera_coeffs_free(sphaera_coeffs* c);

/* Synthesis onto the Gauss-Legendre x uniform-longitude grid of the given
 * bandlimit (>= the coefficient bandlimit), and the inverse transform. */
sphaera_status sphaera_synthesize(const sphaera_coeffs* c, int grid_bandlimit,
                                  sphaera_map** out);
sphaera_status sphaera_analyze(const sphaera_map* m, int L, sphaera_coeffs** out);
sphaera_status sphaera_map_write(const sphaera_map* m, const char* path,
                                 const char* comment /* nullable */);
sphaera_status sphaera_map_read(const char* path, sphaera_map** out);
void sphaera_map_free(sphaera_map* m);

/* ------------------------------------------------------------------ */
/* Covariance oracles and dependence structure                         */

/* sum_l (2l+1)/(4pi) C_l Q_l(cos_angle) e^{-(t1+t2) Psi(l(l+1))} with the
 * certified truncation tail. */
sphaera_status sphaera_cov_space_time(const sphaera_spectrum* s, const sphaera_psi* p,
                                      double t1, double t2, double cos_angle, double* value,
                                      double* tail);
/* sum_l (2l+1)/(4pi) C_l e^{-(t2-t1) Psi(l(l+1))}, t2 >= t1. */
sphaera_status sphaera_cov_time(const sphaera_spectrum* s, const sphaera_psi* p, double t1,
                                double t2, double* value, double* tail);
/* sum_l (2l+1)/(4pi) C_l e^{-2 t Psi(l(l+1))}. */
sphaera_status sphaera_mean_field_variance(const sphaera_spectrum* s, const sphaera_psi* p,
                                           double t, double* out);
/* Summed lag covariances of the degree-l component over integer lags;
 * *is_long_range is 1 (with *value = inf) exactly when l = 0. */
sphaera_status sphaera_dependence_sum(const sphaera_spectrum* s, const sphaera_psi* p, int l,
                                      double* value, int* is_long_range);
/* Truncated zonal jump-kernel series sum_{l_min..L} (2l+1)/(4pi) Q_l Psi'. */
sphaera_status sphaera_jump_kernel(const sphaera_psi* p, double cos_angle, int L_trunc,
                                   int l_min, double* value, double* last_term,
                                   double* tail_bound, int* tail_certified);

/* ------------------------------------------------------------------ */
/* Subordinate spherical Brownian motion                               */

/* Sample the walk at the strictly increasing positive times and write the
 * t,theta,phi CSV. */
sphaera_status sphaera_walk_to_csv(const sphaera_psi* p, double theta0, double phi0,
                                   const double* times, size_t n_times, uint64_t seed,
                                   const char* path, const char* comment /* nullable */);

typedef struct sphaera_mc_result {
  double estimate;
  double std_error;
} sphaera_mc_result;

/* Monte Carlo covariance of the coordinates-changed field between
 * independent walks from (theta_x, phi_x) at t1 and (theta_y, phi_y) at t2;
 * the points must differ. */
sphaera_status sphaera_mc_cov_space(const sphaera_spectrum* s, const sphaera_psi* p,
                                    double theta_x, double phi_x, double theta_y, double phi_y,
                                    double t1, double t2, int n, uint64_t seed,
                                    sphaera_mc_result* out);
/* Same along one walk observed at t1 and t2 >= t1. */
sphaera_status sphaera_mc_cov_time(const sphaera_spectrum* s, const sphaera_psi* p,
                                   double theta, double phi, double t1, double t2, int n,
                                   uint64_t seed, sphaera_mc_result* out);

/* ------------------------------------------------------------------ */
/* Verification battery                                                */

/* Runs the full statistical acceptance suite for the given seed; *json
 * receives the report (free with sphaera_string_free) and *all_pass is 1
 * iff every criterion passed. */
sphaera_status sphaera_verify_run(uint64_t seed, char** json, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* SPHAERA_H */
