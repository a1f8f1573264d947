#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
// Exercises the shared-library surface only: no core headers, just the
// installed C API.
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "doctest.h"
#include "sphaera/sphaera.h"

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const char* name) : path(name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("version and error text plumbing") {
  REQUIRE(sphaera_version() != nullptr);
  CHECK(std::strlen(sphaera_version()) >= 5);

  sphaera_psi* p = nullptr;
  CHECK(sphaera_psi_parse("bogus:x=1", &p) == SPHAERA_ERR_INVALID_ARGUMENT);
  CHECK(p == nullptr);
  CHECK(std::strlen(sphaera_last_error()) > 0);

  CHECK(sphaera_psi_parse("gamma", &p) == SPHAERA_OK);
  CHECK(std::strlen(sphaera_last_error()) == 0);  // success clears the message
  sphaera_psi_free(p);
}

TEST_CASE("status codes map the failure modes") {
  // invalid argument
  CHECK(sphaera_psi_parse(nullptr, nullptr) == SPHAERA_ERR_INVALID_ARGUMENT);

  // domain error: singular derivative at zero
  sphaera_psi* st = nullptr;
  REQUIRE(sphaera_psi_parse("stable:alpha=0.5", &st) == SPHAERA_OK);
  double v = 0;
  CHECK(sphaera_psi_prime(st, 0.0, &v) == SPHAERA_ERR_DOMAIN);
  CHECK(sphaera_psi_prime(st, 4.0, &v) == SPHAERA_OK);
  CHECK(v == doctest::Approx(0.25));

  // io error
  sphaera_coeffs* c = nullptr;
  CHECK(sphaera_coeffs_read("tmp_capi_missing.csv", &c) == SPHAERA_ERR_IO);
  sphaera_psi_free(st);
}

TEST_CASE("psi evaluation and the levy cross-check") {
  sphaera_psi* p = nullptr;
  REQUIRE(sphaera_psi_parse("geostable:alpha=0.7", &p) == SPHAERA_OK);
  double direct = 0, quad = 0;
  REQUIRE(sphaera_psi_eval(p, 3.0, &direct) == SPHAERA_OK);
  CHECK(direct == doctest::Approx(std::log(1.0 + std::pow(3.0, 0.7))));
  REQUIRE(sphaera_psi_from_levy(p, 3.0, &quad) == SPHAERA_OK);
  CHECK(quad == doctest::Approx(direct).epsilon(1e-6));

  char* spec = nullptr;
  REQUIRE(sphaera_psi_spec_string(p, &spec) == SPHAERA_OK);
  CHECK(std::string(spec).rfind("geostable:", 0) == 0);
  sphaera_string_free(spec);
  sphaera_psi_free(p);
}

TEST_CASE("spectrum handles") {
  sphaera_spectrum* s = nullptr;
  REQUIRE(sphaera_spectrum_parse("power:A=1,gamma=3", 8, &s) == SPHAERA_OK);
  CHECK(sphaera_spectrum_bandlimit(s) == 8);
  double c2 = 0;
  REQUIRE(sphaera_spectrum_value(s, 2, &c2) == SPHAERA_OK);
  CHECK(c2 == doctest::Approx(1.0 / 27.0));
  CHECK(sphaera_spectrum_value(s, 9, &c2) == SPHAERA_ERR_INVALID_ARGUMENT);

  double var = 0, tail = 0;
  REQUIRE(sphaera_field_variance(s, &var, &tail) == SPHAERA_OK);
  CHECK(var > 0);
  CHECK(tail > 0);
  sphaera_spectrum_free(s);

  CHECK(sphaera_spectrum_parse("power:A=1,gamma=1", 8, &s) == SPHAERA_ERR_INVALID_ARGUMENT);
}

TEST_CASE("field sampling, evolution, and file round trips") {
  TempFile f("tmp_capi_coeffs.csv");
  sphaera_spectrum* s = nullptr;
  REQUIRE(sphaera_spectrum_parse("power:A=1,gamma=3", 6, &s) == SPHAERA_OK);

  sphaera_coeffs* a = nullptr;
  sphaera_coeffs* b = nullptr;
  REQUIRE(sphaera_sample_field(s, 42, &a) == SPHAERA_OK);
  REQUIRE(sphaera_sample_field(s, 42, &b) == SPHAERA_OK);
  CHECK(sphaera_coeffs_bandlimit(a) == 6);
  for (int l = 0; l <= 6; ++l)
    for (int m = 0; m <= l; ++m) {
      double re1, im1, re2, im2;
      REQUIRE(sphaera_coeffs_get(a, l, m, &re1, &im1) == SPHAERA_OK);
      REQUIRE(sphaera_coeffs_get(b, l, m, &re2, &im2) == SPHAERA_OK);
      CHECK(re1 == re2);
      CHECK(im1 == im2);
    }
  sphaera_coeffs_free(b);

  REQUIRE(sphaera_coeffs_write(a, f.path.c_str(), "seed=42") == SPHAERA_OK);
  sphaera_coeffs* back = nullptr;
  REQUIRE(sphaera_coeffs_read(f.path.c_str(), &back) == SPHAERA_OK);

  // t = 0 evolution is the identity on the stored values
  sphaera_psi* p = nullptr;
  REQUIRE(sphaera_psi_parse("stable:alpha=0.5", &p) == SPHAERA_OK);
  sphaera_coeffs* e0 = nullptr;
  REQUIRE(sphaera_evolve(back, p, 0.0, &e0) == SPHAERA_OK);
  for (int l = 0; l <= 6; ++l)
    for (int m = 0; m <= l; ++m) {
      double re1, im1, re2, im2;
      REQUIRE(sphaera_coeffs_get(a, l, m, &re1, &im1) == SPHAERA_OK);
      REQUIRE(sphaera_coeffs_get(e0, l, m, &re2, &im2) == SPHAERA_OK);
      CHECK(re1 == re2);
      CHECK(im1 == im2);
    }
  CHECK(sphaera_evolve(back, p, -1.0, &e0) == SPHAERA_ERR_INVALID_ARGUMENT);

  // a pointwise value propagates through synthesis
  double direct = 0;
  REQUIRE(sphaera_evaluate(a, 0.9, 1.1, &direct) == SPHAERA_OK);
  sphaera_map* m = nullptr;
  REQUIRE(sphaera_synthesize(a, 6, &m) == SPHAERA_OK);
  sphaera_coeffs* again = nullptr;
  REQUIRE(sphaera_analyze(m, 6, &again) == SPHAERA_OK);
  double back_val = 0;
  REQUIRE(sphaera_evaluate(again, 0.9, 1.1, &back_val) == SPHAERA_OK);
  CHECK(back_val == doctest::Approx(direct).epsilon(1e-10));

  sphaera_map_free(m);
  sphaera_coeffs_free(again);
  sphaera_coeffs_free(e0);
  sphaera_coeffs_free(back);
  sphaera_coeffs_free(a);
  sphaera_psi_free(p);
  sphaera_spectrum_free(s);
}

TEST_CASE("oracles and Monte Carlo through the C surface") {
  sphaera_spectrum* s = nullptr;
  sphaera_psi* p = nullptr;
  REQUIRE(sphaera_spectrum_parse("power:A=1,gamma=3", 4, &s) == SPHAERA_OK);
  REQUIRE(sphaera_psi_parse("gamma", &p) == SPHAERA_OK);

  double v1 = 0, tail1 = 0, v2 = 0, tail2 = 0;
  REQUIRE(sphaera_cov_space_time(s, p, 0.0, 0.0, 1.0, &v1, &tail1) == SPHAERA_OK);
  double var = 0, vtail = 0;
  REQUIRE(sphaera_field_variance(s, &var, &vtail) == SPHAERA_OK);
  CHECK(v1 == doctest::Approx(var).epsilon(1e-13));
  REQUIRE(sphaera_cov_time(s, p, 0.2, 0.7, &v2, &tail2) == SPHAERA_OK);
  CHECK(v2 < v1);
  CHECK(sphaera_cov_time(s, p, 0.7, 0.2, &v2, &tail2) == SPHAERA_ERR_INVALID_ARGUMENT);

  double mfv = 0;
  REQUIRE(sphaera_mean_field_variance(s, p, 0.5, &mfv) == SPHAERA_OK);
  CHECK(mfv < var);

  double dep = 0;
  int long_range = -1;
  REQUIRE(sphaera_dependence_sum(s, p, 0, &dep, &long_range) == SPHAERA_OK);
  CHECK(long_range == 1);
  REQUIRE(sphaera_dependence_sum(s, p, 2, &dep, &long_range) == SPHAERA_OK);
  CHECK(long_range == 0);
  CHECK(dep > 0);

  double kv = 0, klast = 0, ktail = 0;
  int kcert = -1;
  REQUIRE(sphaera_jump_kernel(p, 0.3, 32, 0, &kv, &klast, &ktail, &kcert) == SPHAERA_OK);
  CHECK(std::isfinite(kv));
  CHECK(kcert == 0);

  sphaera_mc_result r{};
  REQUIRE(sphaera_mc_cov_time(s, p, 0.7, 0.4, 0.5, 1.0, 400, 7, &r) == SPHAERA_OK);
  CHECK(r.std_error > 0);
  sphaera_mc_result r2{};
  REQUIRE(sphaera_mc_cov_time(s, p, 0.7, 0.4, 0.5, 1.0, 400, 7, &r2) == SPHAERA_OK);
  CHECK(r.estimate == r2.estimate);

  double analytic = 0, est = 0, se = 0, z = 0;
  REQUIRE(sphaera_laplace_check(p, 1.0, 1.0, 5000, 11, &analytic, &est, &se, &z) ==
          SPHAERA_OK);
  CHECK(analytic == doctest::Approx(std::exp(-std::log(2.0))));
  CHECK(std::abs(z) <= 4.0);

  sphaera_psi_free(p);
  sphaera_spectrum_free(s);
}

TEST_CASE("walk CSV emission") {
  TempFile f("tmp_capi_walk.csv");
  sphaera_psi* p = nullptr;
  REQUIRE(sphaera_psi_parse("gamma", &p) == SPHAERA_OK);
  const double times[3] = {0.5, 1.0, 1.5};
  REQUIRE(sphaera_walk_to_csv(p, 0.3, 0.9, times, 3, 5, f.path.c_str(), "seed=5") ==
          SPHAERA_OK);
  std::FILE* fh = std::fopen(f.path.c_str(), "r");
  REQUIRE(fh != nullptr);
  char line[256];
  REQUIRE(std::fgets(line, sizeof line, fh) != nullptr);
  CHECK(std::strncmp(line, "# sphaera-walk", 14) == 0);
  std::fclose(fh);

  const double bad[2] = {1.0, 0.5};
  CHECK(sphaera_walk_to_csv(p, 0.3, 0.9, bad, 2, 5, f.path.c_str(), nullptr) ==
        SPHAERA_ERR_INVALID_ARGUMENT);
  sphaera_psi_free(p);
}
