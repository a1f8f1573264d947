#include "sphaera/sphaera.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/evolution.hpp"
#include "core/fields.hpp"
#include "core/grid.hpp"
#include "core/io.hpp"
#include "core/spectrum.hpp"
#include "core/sphere_walk.hpp"
#include "core/subordinator.hpp"
#include "core/threads.hpp"
#include "core/transform.hpp"
#include "core/verify.hpp"
#include "core/version.hpp"

struct sphaera_spectrum {
  sphaera::PowerSpectrum v;
};
struct sphaera_psi {
  sphaera::LaplaceExponent v;
};
struct sphaera_coeffs {
  sphaera::HarmonicCoefficients v;
};
struct sphaera_map {
  sphaera::FieldMap v;
};

namespace {

thread_local std::string g_last_error;

// Run the body, translate exceptions into status codes and the thread-local
// message.  Outputs must be assigned inside the body only.
template <typename F>
sphaera_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SPHAERA_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SPHAERA_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return SPHAERA_ERR_DOMAIN;
  } catch (const sphaera::IoError& e) {
    g_last_error = e.what();
    return SPHAERA_ERR_IO;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    return SPHAERA_ERR_NUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SPHAERA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SPHAERA_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<std::string> comment_lines(const char* comment) {
  std::vector<std::string> out;
  if (comment && *comment) out.emplace_back(comment);
  return out;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* sphaera_version(void) { return sphaera::kVersion; }

const char* sphaera_last_error(void) { return g_last_error.c_str(); }

void sphaera_set_max_threads(int n) { sphaera::set_max_threads(n); }

void sphaera_string_free(char* s) { std::free(s); }

/* --- spectra ----------------------------------------------------------- */

sphaera_status sphaera_spectrum_parse(const char* spec, int bandlimit, sphaera_spectrum** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    *out = new sphaera_spectrum{sphaera::parse_spectrum_spec(spec, bandlimit)};
  });
}

sphaera_status sphaera_spectrum_read(const char* path, sphaera_spectrum** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new sphaera_spectrum{sphaera::read_spectrum(path)};
  });
}

sphaera_status sphaera_spectrum_write(const sphaera_spectrum* s, const char* path,
                                      const char* comment) {
  return guarded([&] {
    require(s && path, "null argument");
    sphaera::write_spectrum(path, s->v, comment_lines(comment));
  });
}

int sphaera_spectrum_bandlimit(const sphaera_spectrum* s) { return s ? s->v.bandlimit : -1; }

sphaera_status sphaera_spectrum_value(const sphaera_spectrum* s, int l, double* out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = s->v.at(l);
  });
}

sphaera_status sphaera_field_variance(const sphaera_spectrum* s, double* value, double* tail) {
  return guarded([&] {
    require(s && value && tail, "null argument");
    sphaera::SeriesValue v = sphaera::field_variance(s->v);
    *value = v.value;
    *tail = v.tail;
  });
}

sphaera_status sphaera_effective_spectrum(const sphaera_spectrum* s, const sphaera_psi* psi,
                                          double t, sphaera_spectrum** out) {
  return guarded([&] {
    require(s && psi && out, "null argument");
    *out = new sphaera_spectrum{sphaera::effective_spectrum(s->v, psi->v, t)};
  });
}

void sphaera_spectrum_free(sphaera_spectrum* s) { delete s; }

/* --- Laplace exponents -------------------------------------------------- */

sphaera_status sphaera_psi_parse(const char* spec, sphaera_psi** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    *out = new sphaera_psi{sphaera::parse_psi_spec(spec)};
  });
}

sphaera_status sphaera_psi_spec_string(const sphaera_psi* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = dup_string(sphaera::psi_spec_string(p->v));
  });
}

sphaera_status sphaera_psi_eval(const sphaera_psi* p, double mu, double* out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = sphaera::psi(p->v, mu);
  });
}

sphaera_status sphaera_psi_prime(const sphaera_psi* p, double mu, double* out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = sphaera::psi_prime(p->v, mu);
  });
}

sphaera_status sphaera_psi_from_levy(const sphaera_psi* p, double mu, double* out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = sphaera::psi_from_levy_measure(p->v, mu);
  });
}

void sphaera_psi_free(sphaera_psi* p) { delete p; }

sphaera_status sphaera_laplace_check(const sphaera_psi* p, double t, double mu, int n,
                                     uint64_t seed, double* analytic, double* estimate,
                                     double* std_error, double* z_score) {
  return guarded([&] {
    require(p && analytic && estimate && std_error && z_score, "null argument");
    sphaera::LaplaceCheck chk =
        sphaera::laplace_transform_check(p->v, t, mu, n, sphaera::RngStream(seed));
    *analytic = chk.analytic;
    *estimate = chk.estimate;
    *std_error = chk.std_error;
    *z_score = chk.z_score;
  });
}

/* --- coefficients and maps ---------------------------------------------- */

sphaera_status sphaera_sample_field(const sphaera_spectrum* s, uint64_t seed,
                                    sphaera_coeffs** out) {
  return guarded([&] {
    require(s && out, "null argument");
    sphaera::RngStream rng(seed);
    *out = new sphaera_coeffs{sphaera::sample_field(s->v, rng)};
  });
}

sphaera_status sphaera_coeffs_read(const char* path, sphaera_coeffs** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new sphaera_coeffs{sphaera::read_coefficients(path)};
  });
}

sphaera_status sphaera_coeffs_write(const sphaera_coeffs* c, const char* path,
                                    const char* comment) {
  return guarded([&] {
    require(c && path, "null argument");
    sphaera::write_coefficients(path, c->v, comment_lines(comment));
  });
}

int sphaera_coeffs_bandlimit(const sphaera_coeffs* c) { return c ? c->v.bandlimit() : -1; }

sphaera_status sphaera_coeffs_get(const sphaera_coeffs* c, int l, int m, double* re,
                                  double* im) {
  return guarded([&] {
    require(c && re && im, "null argument");
    std::complex<double> v = c->v.at(l, m);
    *re = v.real();
    *im = v.imag();
  });
}

sphaera_status sphaera_evaluate(const sphaera_coeffs* c, double theta, double phi, double* out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = sphaera::evaluate_field(c->v, sphaera::make_point(theta, phi));
  });
}

sphaera_status sphaera_estimate_spectrum(const sphaera_coeffs* c, sphaera_spectrum** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = new sphaera_spectrum{sphaera::estimate_spectrum(c->v)};
  });
}

sphaera_status sphaera_evolve(const sphaera_coeffs* c, const sphaera_psi* p, double t,
                              sphaera_coeffs** out) {
  return guarded([&] {
    require(c && p && out, "null argument");
    *out = new sphaera_coeffs{sphaera::apply_semigroup(c->v, p->v, t)};
  });
}

sphaera_status sphaera_generator(const sphaera_coeffs* c, const sphaera_psi* p,
                                 sphaera_coeffs** out) {
  return guarded([&] {
    require(c && p && out, "null argument");
    *out = new sphaera_coeffs{sphaera::apply_generator(c->v, p->v)};
  });
}

void sphaera_coeffs_free(sphaera_coeffs* c) { delete c; }

sphaera_status sphaera_synthesize(const sphaera_coeffs* c, int grid_bandlimit,
                                  sphaera_map** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = new sphaera_map{sphaera::synthesize(c->v, sphaera::make_grid(grid_bandlimit))};
  });
}

sphaera_status sphaera_analyze(const sphaera_map* m, int L, sphaera_coeffs** out) {
  return guarded([&] {
    require(m && out, "null argument");
    *out = new sphaera_coeffs{sphaera::analyze(m->v, L)};
  });
}

sphaera_status sphaera_map_write(const sphaera_map* m, const char* path, const char* comment) {
  return guarded([&] {
    require(m && path, "null argument");
    sphaera::write_map(path, m->v, comment_lines(comment));
  });
}

sphaera_status sphaera_map_read(const char* path, sphaera_map** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new sphaera_map{sphaera::read_map(path)};
  });
}

void sphaera_map_free(sphaera_map* m) { delete m; }

/* --- covariance oracles -------------------------------------------------- */

sphaera_status sphaera_cov_space_time(const sphaera_spectrum* s, const sphaera_psi* p,
                                      double t1, double t2, double cos_angle, double* value,
                                      double* tail) {
  return guarded([&] {
    require(s && p && value && tail, "null argument");
    sphaera::SeriesValue v = sphaera::cov_space_time({s->v, p->v, t1, t2, cos_angle});
    *value = v.value;
    *tail = v.tail;
  });
}

sphaera_status sphaera_cov_time(const sphaera_spectrum* s, const sphaera_psi* p, double t1,
                                double t2, double* value, double* tail) {
  return guarded([&] {
    require(s && p && value && tail, "null argument");
    sphaera::SeriesValue v = sphaera::cov_time({s->v, p->v, t1, t2, 1.0});
    *value = v.value;
    *tail = v.tail;
  });
}

sphaera_status sphaera_mean_field_variance(const sphaera_spectrum* s, const sphaera_psi* p,
                                           double t, double* out) {
  return guarded([&] {
    require(s && p && out, "null argument");
    *out = sphaera::mean_field_variance(s->v, p->v, t);
  });
}

sphaera_status sphaera_dependence_sum(const sphaera_spectrum* s, const sphaera_psi* p, int l,
                                      double* value, int* is_long_range) {
  return guarded([&] {
    require(s && p && value && is_long_range, "null argument");
    sphaera::DependenceSum d = sphaera::dependence_sum(s->v, p->v, l);
    *value = d.value;
    *is_long_range = d.range == sphaera::DependenceRange::Long ? 1 : 0;
  });
}

sphaera_status sphaera_jump_kernel(const sphaera_psi* p, double cos_angle, int L_trunc,
                                   int l_min, double* value, double* last_term,
                                   double* tail_bound, int* tail_certified) {
  return guarded([&] {
    require(p && value && last_term && tail_bound && tail_certified, "null argument");
    sphaera::JumpKernelResult r = sphaera::jump_kernel(p->v, cos_angle, L_trunc, l_min);
    *value = r.value;
    *last_term = r.last_term;
    *tail_bound = r.tail_bound;
    *tail_certified = r.tail_certified ? 1 : 0;
  });
}

/* --- walks and Monte Carlo ------------------------------------------------ */

sphaera_status sphaera_walk_to_csv(const sphaera_psi* p, double theta0, double phi0,
                                   const double* times, size_t n_times, uint64_t seed,
                                   const char* path, const char* comment) {
  return guarded([&] {
    require(p && times && path, "null argument");
    require(n_times > 0, "empty time grid");
    sphaera::RngStream rng(seed);
    sphaera::WalkPath w =
        sphaera::sample_subordinate_path(sphaera::make_point(theta0, phi0), p->v,
                                         std::vector<double>(times, times + n_times), rng);
    sphaera::write_walk(path, w, comment_lines(comment));
  });
}

sphaera_status sphaera_mc_cov_space(const sphaera_spectrum* s, const sphaera_psi* p,
                                    double theta_x, double phi_x, double theta_y, double phi_y,
                                    double t1, double t2, int n, uint64_t seed,
                                    sphaera_mc_result* out) {
  return guarded([&] {
    require(s && p && out, "null argument");
    sphaera::McEstimate e =
        sphaera::mc_cov_space(s->v, p->v, sphaera::make_point(theta_x, phi_x),
                              sphaera::make_point(theta_y, phi_y), t1, t2, n,
                              sphaera::RngStream(seed));
    *out = {e.estimate, e.std_error};
  });
}

sphaera_status sphaera_mc_cov_time(const sphaera_spectrum* s, const sphaera_psi* p,
                                   double theta, double phi, double t1, double t2, int n,
                                   uint64_t seed, sphaera_mc_result* out) {
  return guarded([&] {
    require(s && p && out, "null argument");
    sphaera::McEstimate e = sphaera::mc_cov_time(s->v, p->v, sphaera::make_point(theta, phi),
                                                 t1, t2, n, sphaera::RngStream(seed));
    *out = {e.estimate, e.std_error};
  });
}

/* --- verification ---------------------------------------------------------- */

sphaera_status sphaera_verify_run(uint64_t seed, char** json, int* all_pass) {
  return guarded([&] {
    require(json && all_pass, "null argument");
    sphaera::VerifyReport rep = sphaera::run_verification(seed);
    *json = dup_string(sphaera::report_json(rep));
    *all_pass = rep.all_pass() ? 1 : 0;
  });
}

}  // extern "C"
