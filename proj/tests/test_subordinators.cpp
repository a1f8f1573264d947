#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/mittag_leffler.hpp"
#include "core/rng.hpp"
#include "core/stats.hpp"
#include "core/subordinator.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace sphaera;

TEST_CASE("psi closed forms") {
  CHECK(psi(LaplaceExponent::stable(0.5), 4.0) == doctest::Approx(2.0));
  CHECK(psi(LaplaceExponent::stable(1.0), 3.7) == doctest::Approx(3.7));
  CHECK(psi(LaplaceExponent::stable_with_drift(2.0, 0.5), 4.0) == doctest::Approx(10.0));
  CHECK(psi(LaplaceExponent::gamma(), std::exp(1.0) - 1.0) == doctest::Approx(1.0));
  CHECK(psi(LaplaceExponent::geometric_stable(0.5), 9.0) == doctest::Approx(std::log(4.0)));
  CHECK(psi(LaplaceExponent::sum(2.0, 0.5, 3.0, 1.0), 4.0) ==
        doctest::Approx(4.0 + 3.0 * std::log(5.0)));
  // the boundary index degenerates geometric stable to gamma
  for (double mu : {0.1, 1.0, 7.0})
    CHECK(psi(LaplaceExponent::geometric_stable(1.0), mu) ==
          doctest::Approx(psi(LaplaceExponent::gamma(), mu)));
  CHECK(psi(LaplaceExponent::gamma(), 0.0) == 0.0);
  CHECK_THROWS_AS(psi(LaplaceExponent::gamma(), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(LaplaceExponent::stable(0.0), std::invalid_argument);
  CHECK_THROWS_AS(LaplaceExponent::stable(1.2), std::invalid_argument);
  CHECK_THROWS_AS(LaplaceExponent::stable_with_drift(-1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(LaplaceExponent::sum(0.0, 0.5, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("psi_prime matches finite differences away from zero") {
  const LaplaceExponent kinds[] = {
      LaplaceExponent::stable(0.6), LaplaceExponent::stable_with_drift(0.5, 0.3),
      LaplaceExponent::gamma(), LaplaceExponent::geometric_stable(0.8),
      LaplaceExponent::sum(1.0, 0.4, 2.0, 0.9)};
  for (const auto& e : kinds)
    for (double mu : {0.3, 1.0, 5.0}) {
      double fd = testsup::central_diff([&](double x) { return psi(e, x); }, mu, 1e-5);
      CHECK(psi_prime(e, mu) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("psi_prime singularity set at zero") {
  CHECK(psi_prime_singular_at_zero(LaplaceExponent::stable(0.5)));
  CHECK_FALSE(psi_prime_singular_at_zero(LaplaceExponent::stable(1.0)));
  CHECK_FALSE(psi_prime_singular_at_zero(LaplaceExponent::gamma()));
  CHECK(psi_prime_singular_at_zero(LaplaceExponent::geometric_stable(0.5)));
  CHECK(psi_prime_singular_at_zero(LaplaceExponent::sum(1.0, 0.5, 1.0, 1.0)));
  CHECK_FALSE(psi_prime_singular_at_zero(LaplaceExponent::sum(1.0, 1.0, 1.0, 1.0)));
  CHECK_THROWS_AS(psi_prime(LaplaceExponent::stable(0.5), 0.0), std::domain_error);
  CHECK(psi_prime(LaplaceExponent::gamma(), 0.0) == doctest::Approx(1.0));
  CHECK(psi_prime(LaplaceExponent::stable(1.0), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("Levy-measure quadrature recovers psi for the listed densities") {
  const LaplaceExponent kinds[] = {LaplaceExponent::stable(0.3), LaplaceExponent::stable(0.5),
                                   LaplaceExponent::stable(0.9),
                                   LaplaceExponent::stable_with_drift(1.5, 0.5),
                                   LaplaceExponent::gamma(),
                                   LaplaceExponent::geometric_stable(0.5),
                                   LaplaceExponent::geometric_stable(0.8)};
  for (const auto& e : kinds)
    for (double mu : {0.1, 1.0, 10.0, 100.0})
      CHECK(psi_from_levy_measure(e, mu) == doctest::Approx(psi(e, mu)).epsilon(1e-6));
  CHECK(psi_from_levy_measure(LaplaceExponent::gamma(), 0.0) == 0.0);
  CHECK_THROWS_AS(psi_from_levy_measure(LaplaceExponent::sum(1, 0.5, 1, 0.5), 1.0),
                  std::invalid_argument);
}

TEST_CASE("mittag_leffler reference values") {
  // E_1(-x) = exp(-x)
  for (double x : {0.1, 1.0, 4.0, 20.0})
    CHECK(mittag_leffler(1.0, -x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
  // E_{1/2}(-x) = exp(x^2) erfc(x)
  for (double x : {0.2, 1.0, 3.0, 10.0})
    CHECK(mittag_leffler(0.5, -x) ==
          doctest::Approx(std::exp(x * x) * std::erfc(x)).epsilon(1e-9));
  // extended-precision partial sums in the series regime
  for (double a : {0.4, 0.7, 0.95})
    for (double x : {0.3, 1.0, 2.5})
      CHECK(mittag_leffler(a, -x) == doctest::Approx(testsup::ml_series_ref(a, -x)).epsilon(1e-11));
  CHECK(mittag_leffler(0.7, 0.0) == 1.0);
  // completely monotone on the negative axis: positive and decreasing
  double prev = 1.0;
  for (double x = 0.5; x < 2000; x *= 2.3) {
    double v = mittag_leffler(0.3, -x);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(mittag_leffler(1.4, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(mittag_leffler(0.5, 1.0), std::domain_error);
}

TEST_CASE("sampler degenerate cases") {
  RngStream rng(19);
  // boundary stable index: the subordinator is the deterministic drift t
  for (int i = 0; i < 4; ++i)
    CHECK(sample_subordinator(LaplaceExponent::stable(1.0), 0.8, rng) == 0.8);
  // drift floor
  for (int i = 0; i < 50; ++i)
    CHECK(sample_subordinator(LaplaceExponent::stable_with_drift(2.0, 0.5), 0.5, rng) >= 1.0);
  CHECK_THROWS_AS(sample_subordinator(LaplaceExponent::gamma(), 0.0, rng),
                  std::invalid_argument);
}

TEST_CASE("gamma subordinator moments") {
  RngStream rng(23);
  const double t = 1.7;
  std::vector<double> xs(40000);
  for (double& x : xs) x = sample_subordinator(LaplaceExponent::gamma(), t, rng);
  SampleStats s = sample_stats(xs);
  // Gamma(t, 1): mean t, variance t
  CHECK(std::abs(s.mean - t) < 4 * s.std_error);
  double var_se = s.variance * std::sqrt(2.0 / (xs.size() - 1)) * 2.0;  // generous
  CHECK(std::abs(s.variance - t) < 4 * var_se);
}

TEST_CASE("Laplace transform checks for every kind") {
  const LaplaceExponent kinds[] = {
      LaplaceExponent::stable(0.5), LaplaceExponent::stable_with_drift(0.7, 0.5),
      LaplaceExponent::gamma(), LaplaceExponent::geometric_stable(0.7),
      LaplaceExponent::sum(0.4, 0.5, 1.0, 0.3)};
  RngStream rng(31);
  int k = 0;
  for (const auto& e : kinds) {
    LaplaceCheck chk = laplace_transform_check(e, 1.3, 0.9, 20000, rng.derive(77, k++));
    CHECK(chk.analytic == doctest::Approx(std::exp(-1.3 * psi(e, 0.9))));
    CHECK(std::abs(chk.z_score) <= 4.0);
  }
  CHECK_THROWS_AS(laplace_transform_check(kinds[0], 1.0, 1.0, 1, rng), std::invalid_argument);
}

TEST_CASE("laplace check is deterministic in the stream") {
  LaplaceExponent e = LaplaceExponent::geometric_stable(0.6);
  LaplaceCheck a = laplace_transform_check(e, 0.8, 1.1, 5000, RngStream(99));
  LaplaceCheck b = laplace_transform_check(e, 0.8, 1.1, 5000, RngStream(99));
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("psi spec strings round trip") {
  const char* specs[] = {"stable:alpha=0.5", "stable-drift:b=1.5,alpha=0.25", "gamma",
                         "geostable:alpha=0.7", "sum:c=1,alpha=0.5,d=2,beta=0.3"};
  for (const char* sp : specs) {
    LaplaceExponent e = parse_psi_spec(sp);
    LaplaceExponent e2 = parse_psi_spec(psi_spec_string(e));
    for (double mu : {0.2, 2.0, 40.0}) CHECK(psi(e, mu) == psi(e2, mu));
  }
  CHECK_THROWS_AS(parse_psi_spec("stable"), std::invalid_argument);
  CHECK_THROWS_AS(parse_psi_spec("stable:alpha=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_psi_spec("gamma:rate=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_psi_spec("weird"), std::invalid_argument);
  CHECK_THROWS_AS(parse_psi_spec(""), std::invalid_argument);
}
