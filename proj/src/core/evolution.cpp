#include "core/evolution.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "core/legendre.hpp"
#include "core/stats.hpp"

namespace sphaera {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// Multiply every order of degree l by factor(l).
template <typename F>
HarmonicCoefficients scale_by_degree(const HarmonicCoefficients& c, F factor) {
  HarmonicCoefficients out(c.bandlimit());
  for (int l = 0; l <= c.bandlimit(); ++l) {
    double f = factor(l);
    for (int m = 0; m <= l; ++m) out.at(l, m) = f * c.at(l, m);
  }
  return out;
}

}  // namespace

HarmonicCoefficients apply_semigroup(const HarmonicCoefficients& c, const LaplaceExponent& psi,
                                     double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("apply_semigroup: t must be >= 0");
  return scale_by_degree(c, [&](int l) { return std::exp(-t * sphaera::psi(psi, eigenvalue(l))); });
}

HarmonicCoefficients apply_generator(const HarmonicCoefficients& c, const LaplaceExponent& psi) {
  return scale_by_degree(c, [&](int l) { return -sphaera::psi(psi, eigenvalue(l)); });
}

double bochner_check(double alpha, double mu) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("bochner_check: alpha must lie in (0, 1)");
  if (!(mu > 0.0)) throw std::invalid_argument("bochner_check: mu must be > 0");
  // (e^{-s mu} - 1) against alpha s^{-alpha-1} / Gamma(1-alpha) is exactly
  // minus the stable Levy-measure integral.
  return -psi_from_levy_measure(LaplaceExponent::stable(alpha), mu);
}

JumpKernelResult jump_kernel(const LaplaceExponent& psi, double cos_angle, int L_trunc,
                             int l_min) {
  if (l_min < 0 || L_trunc < l_min)
    throw std::invalid_argument("jump_kernel: need L_trunc >= l_min >= 0");
  if (l_min == 0 && psi_prime_singular_at_zero(psi))
    throw std::domain_error("jump_kernel: Psi'(0) singular for this kind; pass l_min >= 1");
  double c = clamp_to_unit(cos_angle);

  std::vector<double> q;
  legendre_all(L_trunc, c, q);
  KahanSum acc;
  double last = 0.0;
  for (int l = l_min; l <= L_trunc; ++l) {
    last = (2.0 * l + 1.0) / kFourPi * q[l] * psi_prime(psi, eigenvalue(l));
    acc.add(last);
  }

  JumpKernelResult out;
  out.value = acc.value();
  out.last_term = std::abs(last);

  // Envelope on the discarded terms: |Q_l| <= min(1, sqrt(2/(pi l s))) with
  // s = sin(angle), and Psi' decreasing (Bernstein).  Sum the envelope until
  // it is spent or clearly divergent.
  double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  auto envelope = [&](long l) {
    double bound = 1.0;
    if (s > 0.0 && l > 0) bound = std::min(1.0, std::sqrt(2.0 / (std::numbers::pi * l * s)));
    return (2.0 * l + 1.0) / kFourPi * bound * psi_prime(psi, eigenvalue(static_cast<int>(l)));
  };
  const long cap = std::max<long>(4L * L_trunc, 200000L);
  KahanSum tail;
  double g_mid = 0.0, g_end = 0.0;
  for (long l = L_trunc + 1; l <= cap; ++l) {
    double g = envelope(l);
    tail.add(g);
    if (l == cap / 2) g_mid = g;
    g_end = g;
  }
  // local decay exponent of the envelope; remainder past the cap by power
  // comparison when it decays faster than 1/l
  double decay = (g_mid > 0.0 && g_end > 0.0) ? std::log2(g_end / g_mid) : -8.0;
  if (decay < -1.05) {
    out.tail_bound = tail.value() + g_end * static_cast<double>(cap) / (-decay - 1.0);
    out.tail_certified = out.tail_bound < 1e-8 * std::max(1.0, std::abs(out.value));
  } else {
    out.tail_bound = std::numeric_limits<double>::infinity();
    out.tail_certified = false;
  }
  return out;
}

SeriesValue cov_space_time(const CovarianceQuery& q) {
  if (!(q.t1 >= 0.0) || !(q.t2 >= 0.0))
    throw std::invalid_argument("cov_space_time: times must be >= 0");
  double c = clamp_to_unit(q.cos_angle);
  const PowerSpectrum& s = q.spectrum;
  std::vector<double> ql;
  legendre_all(s.bandlimit, c, ql);
  double tsum = q.t1 + q.t2;
  KahanSum acc;
  for (int l = 0; l <= s.bandlimit; ++l)
    acc.add((2.0 * l + 1.0) / kFourPi * s.at(l) * ql[l] *
            std::exp(-tsum * psi(q.psi, eigenvalue(l))));
  SeriesValue out;
  out.value = acc.value();
  // |Q_l| <= 1 and the multiplier decreases in l past the bandlimit
  out.tail = spectrum_tail(s) * std::exp(-tsum * psi(q.psi, eigenvalue(s.bandlimit + 1)));
  return out;
}

SeriesValue cov_time(const CovarianceQuery& q) {
  if (q.t2 < q.t1) throw std::invalid_argument("cov_time: need t2 >= t1");
  const PowerSpectrum& s = q.spectrum;
  double tau = q.t2 - q.t1;
  KahanSum acc;
  for (int l = 0; l <= s.bandlimit; ++l)
    acc.add((2.0 * l + 1.0) / kFourPi * s.at(l) * std::exp(-tau * psi(q.psi, eigenvalue(l))));
  SeriesValue out;
  out.value = acc.value();
  out.tail = spectrum_tail(s) * std::exp(-tau * psi(q.psi, eigenvalue(s.bandlimit + 1)));
  return out;
}

double mean_field_variance(const PowerSpectrum& s, const LaplaceExponent& psi, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("mean_field_variance: t must be >= 0");
  KahanSum acc;
  for (int l = 0; l <= s.bandlimit; ++l)
    acc.add((2.0 * l + 1.0) / kFourPi * s.at(l) * std::exp(-2.0 * t * sphaera::psi(psi, eigenvalue(l))));
  return acc.value();
}

namespace {

void check_residual_step(double psi_max, double t, double dt) {
  if (!(t > 0.0) || !(dt > 0.0)) throw std::invalid_argument("pde residual: need t, dt > 0");
  if (!(dt < t)) throw std::invalid_argument("pde residual: need dt < t");
  if (dt * psi_max * psi_max > 0.1)
    throw std::invalid_argument("pde residual: dt too large for central-difference accuracy");
}

}  // namespace

double pde_residual(const HarmonicCoefficients& c, const LaplaceExponent& psi, double t,
                    double dt) {
  double psi_max = sphaera::psi(psi, eigenvalue(c.bandlimit()));
  check_residual_step(psi_max, t, dt);
  HarmonicCoefficients lo = apply_semigroup(c, psi, t - dt);
  HarmonicCoefficients mid = apply_semigroup(c, psi, t);
  HarmonicCoefficients hi = apply_semigroup(c, psi, t + dt);
  double worst = 0.0, scale = 0.0;
  for (int l = 0; l <= c.bandlimit(); ++l) {
    double p = sphaera::psi(psi, eigenvalue(l));
    for (int m = 0; m <= l; ++m) {
      std::complex<double> dda = (hi.at(l, m) - lo.at(l, m)) / (2.0 * dt) + p * mid.at(l, m);
      worst = std::max(worst, std::abs(dda));
      scale = std::max(scale, std::abs(mid.at(l, m)));
    }
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

double cov_pde_residual(const PowerSpectrum& s, double alpha, double t, double dt,
                        double cos_angle) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("cov_pde_residual: alpha must lie in (0, 1)");
  LaplaceExponent frac = LaplaceExponent::stable(alpha);
  double psi_max = psi(frac, eigenvalue(s.bandlimit));
  check_residual_step(psi_max, t, dt);

  double c = clamp_to_unit(cos_angle);
  std::vector<double> ql;
  legendre_all(s.bandlimit, c, ql);

  // initial-condition self-check: the t = 0 zonal series is the static
  // covariance
  CovarianceQuery q{s, frac, 0.0, 0.0, c};
  double gamma0 = cov_space_time(q).value;
  KahanSum ic;
  for (int l = 0; l <= s.bandlimit; ++l) ic.add((2.0 * l + 1.0) / kFourPi * s.at(l) * ql[l]);
  if (std::abs(ic.value() - gamma0) > 1e-10 * std::max(1.0, std::abs(gamma0)))
    throw std::runtime_error("cov_pde_residual: t = 0 series disagrees with the covariance oracle");

  double worst = 0.0, scale = 0.0;
  for (int l = 0; l <= s.bandlimit; ++l) {
    double p = psi(frac, eigenvalue(l));
    double g = (2.0 * l + 1.0) / kFourPi * s.at(l);
    double mid = g * std::exp(-t * p);
    double ddg = g * (std::exp(-(t + dt) * p) - std::exp(-(t - dt) * p)) / (2.0 * dt);
    worst = std::max(worst, std::abs(ddg + p * mid));
    scale = std::max(scale, std::abs(mid));
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

}
