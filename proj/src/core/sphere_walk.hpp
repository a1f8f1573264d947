#pragma once

#include <cstddef>
#include <vector>

#include "core/geometry.hpp"
#include "core/rng.hpp"
#include "core/spectrum.hpp"
#include "core/subordinator.hpp"

namespace sphaera {

// Smallest series truncation L with (2L+1) e^{-t l(l+1)} < 1e-12 at l = L,
// i.e. enough terms that the rotational-BM transition series at time t is
// resolved to rounding.  Degrees above 4096 are refused (domain error): such
// t belong to the small-time sampler path.
int required_bandlimit(double t);

// Transition law of rotational Brownian motion over elapsed time t, reduced
// to the displacement angle:
//   f_t(theta) = sin(theta) sum_l (2l+1)/2 Q_l(cos theta) e^{-t l(l+1)}.
// Tabulated on 4096 uniform intervals of [0, pi]; the cdf column is the
// exact antiderivative of the truncated series at the nodes (clamped
// monotone against truncation ringing) and the density column is clipped at
// zero and renormalized.
struct BmAngleTable {
  double t = 0.0;
  int bandlimit = 0;
  std::vector<double> theta;  // 4097 nodes
  std::vector<double> pdf;
  std::vector<double> cdf;  // cdf.front() = 0, cdf.back() = 1

  double sample(double u) const;  // inverse cdf, linear interpolation
  double mass() const;            // Simpson integral of pdf; 1 to ~1e-9
  double moment(int l) const;     // E Q_l(cos Theta); e^{-t l(l+1)} to ~1e-6
};

BmAngleTable bm_angle_cdf(double t, int L_trunc);
BmAngleTable bm_angle_cdf(double t);  // L_trunc = required_bandlimit(t)

// Exact cdf of the displacement angle under the truncated series (the
// analytic form behind BmAngleTable.cdf; also the sampler's inversion
// target).
double bm_angle_cdf_value(double t, int L_trunc, double theta);

// One rotational-BM step of elapsed time t from x: displacement angle from
// the zonal law (series inversion for t >= 1e-4, tangent-plane Gaussian with
// per-coordinate variance 2t below), azimuth uniform.
SpherePoint sample_bm_step(const SpherePoint& x, double t, RngStream& rng);

struct WalkPath {
  SpherePoint start;
  std::vector<double> times;
  std::vector<SpherePoint> positions;
};

// Subordinate rotational Brownian motion observed at the given strictly
// increasing positive times: independent subordinator increments set the
// operational time of each BM step; a zero increment leaves the position
// unchanged.
WalkPath sample_subordinate_path(const SpherePoint& x, const LaplaceExponent& psi,
                                 const std::vector<double>& times, RngStream& rng);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
};

// Monte Carlo E[T(B^x_{t1}) T(B^y_{t2})] with independent walks from x and y
// (requires x != y) and a fresh field per replication; estimates the
// space-time covariance series.
McEstimate mc_cov_space(const PowerSpectrum& s, const LaplaceExponent& psi, const SpherePoint& x,
                        const SpherePoint& y, double t1, double t2, int n,
                        const RngStream& rng);

// Monte Carlo E[T(B^x_{t1}) T(B^x_{t2})] along ONE walk observed at t1 and
// t2 >= t1; estimates the time-covariance series (a function of t2 - t1).
McEstimate mc_cov_time(const PowerSpectrum& s, const LaplaceExponent& psi, const SpherePoint& x,
                       double t1, double t2, int n, const RngStream& rng);

}
