#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/geometry.hpp"
#include "core/legendre.hpp"
#include "core/rng.hpp"
#include "core/spectrum.hpp"
#include "core/sphere_walk.hpp"
#include "core/stats.hpp"
#include "core/subordinator.hpp"
#include "core/threads.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace sphaera;

TEST_CASE("exact angle CDF endpoints and monotonicity") {
  for (double t : {0.2, 0.7, 2.0}) {
    int L = required_bandlimit(t);
    CHECK(bm_angle_cdf_value(t, L, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(bm_angle_cdf_value(t, L, testsup::kPi) == doctest::Approx(1.0).epsilon(1e-12));
    double prev = -1e-30;
    for (double th = 0.05; th < testsup::kPi; th += 0.08) {
      double f = bm_angle_cdf_value(t, L, th);
      CHECK(f >= prev - 1e-12);
      CHECK(f <= 1.0 + 1e-12);
      prev = f;
    }
  }
}

TEST_CASE("angle table normalizes and matches the exact CDF") {
  const double t = 0.5;
  BmAngleTable tab = bm_angle_cdf(t);
  CHECK(tab.mass() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(tab.cdf.front() == 0.0);
  CHECK(tab.cdf.back() == doctest::Approx(1.0).epsilon(1e-13));
  for (std::size_t i : {500u, 1300u, 2500u, 3600u})
    CHECK(bm_angle_cdf_value(t, tab.bandlimit, tab.theta[i]) ==
          doctest::Approx(tab.cdf[i]).epsilon(1e-9));
}

TEST_CASE("angle table moments reproduce the heat multipliers") {
  for (double t : {0.3, 1.0}) {
    BmAngleTable tab = bm_angle_cdf(t);
    CHECK(tab.moment(0) == doctest::Approx(1.0).epsilon(1e-8));
    for (int l : {1, 2, 4})
      CHECK(tab.moment(l) == doctest::Approx(std::exp(-t * l * (l + 1.0))).epsilon(1e-6));
  }
}

TEST_CASE("table sampling inverts the CDF") {
  BmAngleTable tab = bm_angle_cdf(0.4);
  double prev = 0.0;
  for (double u : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    double th = tab.sample(u);
    CHECK(th >= prev);
    prev = th;
    CHECK(bm_angle_cdf_value(0.4, tab.bandlimit, th) == doctest::Approx(u).epsilon(2e-3));
  }
  CHECK(tab.sample(0.0) == 0.0);
  CHECK(tab.sample(1.0) == doctest::Approx(testsup::kPi));
  CHECK_THROWS_AS(tab.sample(1.5), std::invalid_argument);
}

TEST_CASE("required_bandlimit shrinks with time and refuses tiny times") {
  int l1 = required_bandlimit(0.1);
  int l2 = required_bandlimit(1.0);
  CHECK(l1 > l2);
  CHECK(l2 >= 1);
  CHECK(required_bandlimit(1e-4) <= 4096);
  CHECK_THROWS_AS(required_bandlimit(1e-9), std::domain_error);
  CHECK_THROWS_AS(required_bandlimit(0.0), std::invalid_argument);
}

TEST_CASE("single step statistics match the heat kernel") {
  const double t = 0.3;
  const int N = 20000;
  RngStream rng(101);
  SpherePoint start = make_point(1.0, 2.0);
  std::vector<double> q1(N), q2(N);
  for (int i = 0; i < N; ++i) {
    RngStream sub = rng.derive(5, i);
    SpherePoint p = sample_bm_step(start, t, sub);
    double z = inner(start, p);
    q1[i] = legendre(1, z);
    q2[i] = legendre(2, z);
  }
  SampleStats s1 = sample_stats(q1), s2 = sample_stats(q2);
  CHECK(std::abs(s1.mean - std::exp(-2 * t)) < 4 * s1.std_error);
  CHECK(std::abs(s2.mean - std::exp(-6 * t)) < 4 * s2.std_error);
}

TEST_CASE("small-time branch stays local with the right spread") {
  const double t = 1e-6;
  const int N = 20000;
  RngStream rng(202);
  std::vector<double> th2(N);
  for (int i = 0; i < N; ++i) {
    RngStream sub = rng.derive(6, i);
    SpherePoint p = sample_bm_step(north_pole(), t, sub);
    CHECK(p.theta <= testsup::kPi);
    th2[i] = p.theta * p.theta;
  }
  SampleStats s = sample_stats(th2);
  CHECK(std::abs(s.mean - 4 * t) < 4 * s.std_error);
}

TEST_CASE("subordinate path bookkeeping") {
  LaplaceExponent lam = LaplaceExponent::gamma();
  RngStream rng(77);
  std::vector<double> times = {0.25, 0.5, 1.0, 1.5};
  WalkPath w = sample_subordinate_path(make_point(0.4, 0.9), lam, times, rng);
  CHECK(w.times == times);
  REQUIRE(w.positions.size() == times.size());
  CHECK(w.start.theta == doctest::Approx(0.4));
  for (const auto& p : w.positions) {
    CHECK(p.theta >= 0.0);
    CHECK(p.theta <= testsup::kPi);
  }

  RngStream r1(55), r2(55);
  WalkPath a = sample_subordinate_path(north_pole(), lam, times, r1);
  WalkPath b = sample_subordinate_path(north_pole(), lam, times, r2);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(a.positions[i].theta == b.positions[i].theta);
    CHECK(a.positions[i].phi == b.positions[i].phi);
  }

  CHECK_THROWS_AS(sample_subordinate_path(north_pole(), lam, {0.5, 0.5}, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_subordinate_path(north_pole(), lam, {0.0, 0.5}, rng),
                  std::invalid_argument);
}

TEST_CASE("drift-reduced elementary subordination is plain diffusion") {
  // Psi(mu) = mu makes the random clock deterministic: D_t = t exactly.
  LaplaceExponent elem = LaplaceExponent::stable(1.0);
  const double t = 0.4;
  const int N = 10000;
  RngStream rng(303);
  std::vector<double> q1(N);
  for (int i = 0; i < N; ++i) {
    RngStream sub = rng.derive(8, i);
    WalkPath w = sample_subordinate_path(north_pole(), elem, {t}, sub);
    q1[i] = legendre(1, inner(north_pole(), w.positions[0]));
  }
  SampleStats s = sample_stats(q1);
  CHECK(std::abs(s.mean - std::exp(-2 * t)) < 4 * s.std_error);
}

TEST_CASE("mc estimators validate their inputs") {
  PowerSpectrum s = power_law_spectrum(1.0, 3.0, 4);
  LaplaceExponent lam = LaplaceExponent::gamma();
  RngStream rng(1);
  SpherePoint x = make_point(0.7, 0.4);
  CHECK_THROWS_AS(mc_cov_space(s, lam, x, x, 0.5, 0.5, 1000, rng), std::invalid_argument);
  CHECK_THROWS_AS(mc_cov_space(s, lam, x, make_point(1.2, 2.0), -0.5, 0.5, 1000, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(mc_cov_time(s, lam, x, 1.0, 0.5, 1000, rng), std::invalid_argument);
  CHECK_THROWS_AS(mc_cov_time(s, lam, x, 0.5, 1.0, 50, rng), std::invalid_argument);
}

TEST_CASE("mc_cov_time at zero lag and zero time is the field variance") {
  PowerSpectrum s = power_law_spectrum(1.0, 3.0, 4);
  LaplaceExponent lam = LaplaceExponent::gamma();
  McEstimate e = mc_cov_time(s, lam, make_point(0.7, 0.4), 0.0, 0.0, 3000, RngStream(9));
  double want = field_variance(s).value;
  CHECK(std::abs(e.estimate - want) < 4 * e.std_error);
}

TEST_CASE("mc estimators are deterministic and thread-count independent") {
  PowerSpectrum s = power_law_spectrum(1.0, 3.0, 4);
  LaplaceExponent lam = LaplaceExponent::gamma();
  SpherePoint x = make_point(0.7, 0.4), y = make_point(1.2, 2.0);

  int saved = max_threads();
  set_max_threads(1);
  McEstimate a = mc_cov_space(s, lam, x, y, 0.3, 0.6, 400, RngStream(42));
  set_max_threads(4);
  McEstimate b = mc_cov_space(s, lam, x, y, 0.3, 0.6, 400, RngStream(42));
  McEstimate c = mc_cov_space(s, lam, x, y, 0.3, 0.6, 400, RngStream(42));
  set_max_threads(saved);

  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  CHECK(b.estimate == c.estimate);
}
