#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/evolution.hpp"
#include "core/fields.hpp"
#include "core/grid.hpp"
#include "core/legendre.hpp"
#include "core/rng.hpp"
#include "core/spectrum.hpp"
#include "core/subordinator.hpp"
#include "core/transform.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace sphaera;

namespace {

PowerSpectrum single_mode_spectrum(int l, double cl, int bandlimit) {
  PowerSpectrum s;
  s.bandlimit = bandlimit;
  s.cl.assign(bandlimit + 1, 0.0);
  s.cl[l] = cl;
  return s;
}

}  // namespace

TEST_CASE("semigroup identity, multiplier, composition") {
  PowerSpectrum s = power_law_spectrum(1.0, 3.0, 10);
  RngStream rng(3);
  HarmonicCoefficients c = sample_field(s, rng);
  LaplaceExponent psi05 = LaplaceExponent::stable(0.5);

  HarmonicCoefficients id = apply_semigroup(c, psi05, 0.0);
  for (std::size_t i = 0; i < c.data().size(); ++i) CHECK(id.data()[i] == c.data()[i]);

  HarmonicCoefficients e1 = apply_semigroup(c, psi05, 0.4);
  for (int l = 0; l <= 10; ++l) {
    double mult = std::exp(-0.4 * std::sqrt(l * (l + 1.0)));
    for (int m = 0; m <= l; ++m) CHECK(std::abs(e1.at(l, m) - mult * c.at(l, m)) < 1e-15);
  }

  HarmonicCoefficients two = apply_semigroup(apply_semigroup(c, psi05, 0.25), psi05, 0.15);
  for (std::size_t i = 0; i < c.data().size(); ++i)
    CHECK(std::abs(two.data()[i] - e1.data()[i]) <= 1e-15);

  // the constant mode never decays
  CHECK(e1.at(0, 0) == c.at(0, 0));
  CHECK_THROWS_AS(apply_semigroup(c, psi05, -0.1), std::invalid_argument);
}

TEST_CASE("generator is the diagonal multiplier -psi(mu_l)") {
  PowerSpectrum s = power_law_spectrum(1.0, 3.0, 6);
  RngStream rng(31);
  HarmonicCoefficients c = sample_field(s, rng);
  LaplaceExponent psi05 = LaplaceExponent::stable(0.5);
  HarmonicCoefficients g = apply_generator(c, psi05);
  CHECK(g.at(0, 0) == std::complex<double>(0.0, 0.0));
  for (int m = 0; m <= 1; ++m)
    CHECK(std::abs(g.at(1, m) + std::sqrt(2.0) * c.at(1, m)) < 1e-15);

  // generator and semigroup commute (both diagonal)
  HarmonicCoefficients a = apply_generator(apply_semigroup(c, psi05, 0.3), psi05);
  HarmonicCoefficients b = apply_semigroup(apply_generator(c, psi05), psi05, 0.3);
  for (std::size_t i = 0; i < a.data().size(); ++i)
    CHECK(std::abs(a.data()[i] - b.data()[i]) <= 1e-15);
}

TEST_CASE("generator matches the time derivative of the semigroup") {
  PowerSpectrum s = power_law_spectrum(1.0, 3.0, 8);
  RngStream rng(8);
  HarmonicCoefficients c = sample_field(s, rng);
  LaplaceExponent lam = LaplaceExponent::gamma();
  const double h = 1e-6;
  HarmonicCoefficients hi = apply_semigroup(c, lam, h);
  HarmonicCoefficients lo = apply_semigroup(c, lam, 0.0);
  HarmonicCoefficients g = apply_generator(c, lam);
  for (std::size_t i = 0; i < c.data().size(); ++i) {
    std::complex<double> fd = (hi.data()[i] - lo.data()[i]) / h;
    CHECK(std::abs(fd - g.data()[i]) < 1e-4 * (1.0 + std::abs(g.data()[i])));
  }
}

TEST_CASE("bochner integral reproduces the stable exponent") {
  CHECK(std::abs(bochner_check(0.5, 4.0) + 2.0) <= 1e-7 * 2.0);
  for (double alpha : {0.3, 0.5, 0.8})
    for (double mu : {0.6, 6.0, 90.0}) {
      double want = std::pow(mu, alpha);
      CHECK(std::abs(bochner_check(alpha, mu) + want) <= 1e-7 * want);
      CHECK(bochner_check(alpha, mu) == doctest::Approx(-psi(LaplaceExponent::stable(alpha), mu)).epsilon(1e-7));
    }
  // integrand vanishes as mu -> 0+
  CHECK(std::abs(bochner_check(0.5, 1e-12)) < 1e-5);
  CHECK_THROWS_AS(bochner_check(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bochner_check(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("jump kernel series terms and truncation reporting") {
  LaplaceExponent lam = LaplaceExponent::gamma();
  // l = 0 term alone: psi'(0) = 1
  JumpKernelResult r0 = jump_kernel(lam, 0.3, 0, 0);
  CHECK(r0.value == doctest::Approx(1.0 / (4 * testsup::kPi)).epsilon(1e-14));
  // adding degrees changes the sum by exactly the reported last term
  JumpKernelResult r1 = jump_kernel(lam, 0.3, 1, 0);
  CHECK(r1.value - r0.value == doctest::Approx(r1.last_term).epsilon(1e-12));
  double t1 = 3.0 / (4 * testsup::kPi) * 0.3 * (1.0 / 3.0);  // (2l+1)/4pi Q_1 psi'(2)
  CHECK(r1.last_term == doctest::Approx(t1).epsilon(1e-13));

  // l_min only strips leading terms
  JumpKernelResult full = jump_kernel(lam, -0.42, 64, 0);
  JumpKernelResult tail1 = jump_kernel(lam, -0.42, 64, 1);
  CHECK(full.value - tail1.value == doctest::Approx(1.0 / (4 * testsup::kPi)).epsilon(1e-10));

  // gamma kind: envelope tail is finite but far above the 1e-8 certification bar
  JumpKernelResult g = jump_kernel(lam, std::cos(2.0), 256, 0);
  CHECK(std::isfinite(g.tail_bound));
  CHECK_FALSE(g.tail_certified);
  CHECK(g.tail_bound > 0.0);

  // stable kind: the alternating-envelope series diverges, certification refused
  JumpKernelResult st = jump_kernel(LaplaceExponent::stable(0.5), std::cos(2.0), 256, 1);
  CHECK(std::isinf(st.tail_bound));
  CHECK_FALSE(st.tail_certified);

  // singular derivative at zero must be excluded explicitly
  CHECK_THROWS_AS(jump_kernel(LaplaceExponent::stable(0.5), 0.5, 16, 0), std::domain_error);
  CHECK_THROWS_AS(jump_kernel(lam, 0.5, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(jump_kernel(lam, 1.5, 4, 0), std::domain_error);
}

TEST_CASE("difference quadrature against a generator-weighted zonal kernel") {
  // A zonal kernel K with degree weights w_l reproduces, through
  //   (Af)(x) = Int K(<x,y>) (f(y) - f(x)) dy,
  // the diagonal action (w_l - w_0) f_l.  With w_l = -Psi(mu_l) + C the
  // constant C cancels and A equals the subordinate generator on fields
  // band-limited below the kernel truncation.  All quantities here are
  // polynomials, so grid quadrature is exact and this ties the spectral
  // multiplier to the integral form of the operator.
  const int Lf = 6, Lk = 24, Lq = 20;
  LaplaceExponent lam = LaplaceExponent::gamma();
  PowerSpectrum s = power_law_spectrum(1.0, 3.0, Lf);
  RngStream rng(71);
  HarmonicCoefficients c = sample_field(s, rng);
  HarmonicCoefficients want = apply_generator(c, lam);

  SphereGrid grid = make_grid(Lq);
  FieldMap f = synthesize(c, grid);

  for (double C : {0.0, 2.5}) {
    std::vector<double> w(Lk + 1);
    for (int l = 0; l <= Lk; ++l) w[l] = -psi(lam, eigenvalue(l)) + C;

    std::vector<double> ql;
    for (int ix : {2, 7, 13})
      for (int jx : {0, 11, 29}) {
        SpherePoint x = grid.point(ix, jx);
        double fx = f.at(ix, jx);
        double acc = 0;
        for (int i = 0; i < grid.ntheta(); ++i) {
          for (int j = 0; j < grid.nphi; ++j) {
            SpherePoint y = grid.point(i, j);
            legendre_all(Lk, inner(x, y), ql);
            double kern = 0;
            for (int l = 0; l <= Lk; ++l)
              kern += (2.0 * l + 1.0) / (4 * testsup::kPi) * w[l] * ql[l];
            acc += grid.weight[i] * (2 * testsup::kPi / grid.nphi) * kern * (f.at(i, j) - fx);
          }
        }
        CHECK(acc == doctest::Approx(evaluate_field(want, x)).epsilon(1e-9));
      }
  }
}

TEST_CASE("covariance oracles: closed forms and symmetries") {
  PowerSpectrum s = power_law_spectrum(1.0, 3.0, 8);
  LaplaceExponent lam = LaplaceExponent::stable(0.5);

  SeriesValue stat = cov_space_time({s, lam, 0.0, 0.0, 1.0});
  CHECK(stat.value == doctest::Approx(field_variance(s).value).epsilon(1e-14));

  CHECK(cov_space_time({s, lam, 0.3, 0.9, 0.2}).value ==
        doctest::Approx(cov_space_time({s, lam, 0.9, 0.3, 0.2}).value).epsilon(1e-15));

  // single-term spectrum: (7/4pi) C3 Q3(z) e^{-(t1+t2) Psi(12)}
  PowerSpectrum one = single_mode_spectrum(3, 0.8, 5);
  double z = -0.35, t1 = 0.4, t2 = 0.7;
  double want = 7.0 / (4 * testsup::kPi) * 0.8 * legendre(3, z) *
                std::exp(-(t1 + t2) * std::sqrt(12.0));
  CHECK(cov_space_time({one, lam, t1, t2, z}).value == doctest::Approx(want).epsilon(1e-14));

  // time covariance depends only on the lag and starts at the variance
  CHECK(cov_time({s, lam, 0.7, 0.7, 1.0}).value ==
        doctest::Approx(field_variance(s).value).epsilon(1e-14));
  CHECK(cov_time({s, lam, 0.2, 1.2, 1.0}).value ==
        doctest::Approx(cov_time({s, lam, 5.0, 6.0, 1.0}).value).epsilon(1e-15));
  PowerSpectrum two = single_mode_spectrum(2, 1.3, 4);
  CHECK(cov_time({two, lam, 0.0, 2.0, 1.0}).value ==
        doctest::Approx(5.0 / (4 * testsup::kPi) * 1.3 * std::exp(-2.0 * std::sqrt(6.0)))
            .epsilon(1e-14));
  CHECK_THROWS_AS(cov_time({s, lam, 2.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(cov_space_time({s, lam, -1.0, 0.0, 1.0}), std::invalid_argument);

  // large total time: everything but the constant mode dies
  CHECK(cov_space_time({s, lam, 40.0, 40.0, -0.6}).value ==
        doctest::Approx(s.at(0) / (4 * testsup::kPi)).epsilon(1e-9));
}

TEST_CASE("mean_field_variance limits") {
  PowerSpectrum s = power_law_spectrum(1.0, 3.0, 8);
  LaplaceExponent lam = LaplaceExponent::stable(0.5);
  CHECK(mean_field_variance(s, lam, 0.0) == doctest::Approx(field_variance(s).value));
  CHECK(mean_field_variance(s, lam, 60.0) ==
        doctest::Approx(s.at(0) / (4 * testsup::kPi)).epsilon(1e-10));
  double prev = mean_field_variance(s, lam, 0.0);
  for (double t : {0.2, 0.7, 2.0, 8.0}) {
    double v = mean_field_variance(s, lam, t);
    CHECK(v < prev);
    prev = v;
  }
  PowerSpectrum one = single_mode_spectrum(1, 0.6, 3);
  CHECK(mean_field_variance(one, lam, 1.0) ==
        doctest::Approx(3.0 / (4 * testsup::kPi) * 0.6 * std::exp(-2 * std::sqrt(2.0))));
}

TEST_CASE("pde residual is second-order small") {
  PowerSpectrum s = power_law_spectrum(1.0, 3.0, 16);
  RngStream rng(12);
  HarmonicCoefficients c = sample_field(s, rng);
  LaplaceExponent lam = LaplaceExponent::stable(0.5);

  double r1 = pde_residual(c, lam, 0.5, 1e-4);
  CHECK(r1 <= 1e-6);
  double r2 = pde_residual(c, lam, 0.5, 5e-5);
  CHECK(r1 / r2 > 3.2);
  CHECK(r1 / r2 < 4.8);

  // constant field: exact cancellation
  HarmonicCoefficients flat(4);
  flat.at(0, 0) = {1.0, 0.0};
  CHECK(pde_residual(flat, lam, 0.5, 1e-4) == 0.0);

  CHECK_THROWS_AS(pde_residual(c, lam, 0.5, 0.6), std::invalid_argument);   // dt >= t
  CHECK_THROWS_AS(pde_residual(c, lam, 2.0, 0.01), std::invalid_argument);  // dt Psi^2 too big
}

TEST_CASE("covariance pde residual") {
  PowerSpectrum s = power_law_spectrum(1.0, 3.0, 16);
  double r1 = cov_pde_residual(s, 0.5, 0.5, 1e-4, 0.3);
  CHECK(r1 <= 1e-6);
  double r2 = cov_pde_residual(s, 0.5, 0.5, 5e-5, 0.3);
  CHECK(r1 / r2 > 3.2);
  CHECK(r1 / r2 < 4.8);
  CHECK_THROWS_AS(cov_pde_residual(s, 1.0, 0.5, 1e-4, 0.3), std::invalid_argument);
}
