#pragma once

#include "core/fields.hpp"
#include "core/spectrum.hpp"
#include "core/subordinator.hpp"

namespace sphaera {

// a_{lm} -> exp(-t Psi(l(l+1))) a_{lm}; the l = 0 mode is fixed (Psi(0) = 0).
HarmonicCoefficients apply_semigroup(const HarmonicCoefficients& c, const LaplaceExponent& psi,
                                     double t);

// a_{lm} -> -Psi(l(l+1)) a_{lm}; annihilates the l = 0 mode.  For
// Psi(mu) = mu this is the spectral spherical Laplacian.
HarmonicCoefficients apply_generator(const HarmonicCoefficients& c, const LaplaceExponent& psi);

// Fractional power by subordination (Bochner):
// alpha/Gamma(1-alpha) Int_0^inf (e^{-s mu} - 1) s^{-alpha-1} ds = -mu^alpha,
// evaluated by singularity-split quadrature.  Raises on quadrature
// disagreement under refinement.
double bochner_check(double alpha, double mu);

struct JumpKernelResult {
  double value = 0.0;      // sum_{l=l_min}^{L} (2l+1)/(4pi) Q_l(cos) Psi'(mu_l)
  double last_term = 0.0;  // magnitude of the l = L term
  double tail_bound = 0.0;  // envelope bound on the discarded l > L terms
  bool tail_certified = false;  // tail_bound established and < 1e-8 of scale
};

// Zonal kernel of the subordinator-generated nonlocal operator.  Kinds whose
// Psi' blows up at 0 need l_min >= 1; the excluded l = 0 term is harmless on
// zero-mean functions.  The tail bound combines the Bernstein envelope
// |Q_l(cos)| <= sqrt(2/(pi l sin)) with the monotone decay of Psi'; for
// stable-type kinds the envelope series diverges and certification is
// honestly refused.
JumpKernelResult jump_kernel(const LaplaceExponent& psi, double cos_angle, int L_trunc,
                             int l_min);

struct CovarianceQuery {
  PowerSpectrum spectrum;
  LaplaceExponent psi;
  double t1 = 0.0;
  double t2 = 0.0;
  double cos_angle = 1.0;
};

// E[eta_{t1}(x) eta_{t2}(y)] = sum_l (2l+1)/(4pi) C_l Q_l(cos) e^{-(t1+t2) Psi(mu_l)},
// truncated at the spectrum bandlimit with a certified family tail bound.
SeriesValue cov_space_time(const CovarianceQuery& q);

// E[T(B_{t1}) T(B_{t2})] = sum_l (2l+1)/(4pi) C_l e^{-(t2-t1) Psi(mu_l)};
// depends on t2 - t1 only (requires t2 >= t1).
SeriesValue cov_time(const CovarianceQuery& q);

// sum_l (2l+1)/(4pi) C_l e^{-2 t Psi(mu_l)}, the variance of the
// semigroup-evolved field (strictly below the t = 0 variance once any
// l >= 1 power is present).
double mean_field_variance(const PowerSpectrum& s, const LaplaceExponent& psi, double t);

// Max over (l,m) of |d/dt a_{lm}(t) + Psi(mu_l) a_{lm}(t)| (central
// difference, step dt), normalized by max |a_{lm}(t)|; O(dt^2) small when
// the evolution is exact.  Requires dt * max_l Psi(mu_l)^2 <= 0.1 and dt < t.
double pde_residual(const HarmonicCoefficients& c, const LaplaceExponent& psi, double t,
                    double dt);

// Same residual for the zonal covariance function of the alpha-stable flow:
// coefficients g_l(t) = (2l+1)/(4pi) C_l e^{-t mu_l^alpha} checked against
// d/dt g_l = -mu_l^alpha g_l, maximized over l; also verifies the t = 0
// series against cov_space_time at t1 = t2 = 0 at the given angle.
double cov_pde_residual(const PowerSpectrum& s, double alpha, double t, double dt,
                        double cos_angle);

}
