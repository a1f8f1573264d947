#include "core/sphere_walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/fields.hpp"
#include "core/legendre.hpp"
#include "core/stats.hpp"
#include "core/threads.hpp"

namespace sphaera {

namespace {

constexpr int kTableIntervals = 4096;
constexpr int kMaxSeriesDegree = 4096;
constexpr double kSmallTimeCrossover = 1e-4;

// Exact antiderivative of the truncated transition series, from
// int_z^1 Q_l = (Q_{l-1}(z) - Q_{l+1}(z)) / (2l+1) with Q_{-1} := 1:
//   F_t(theta) = 1/2 sum_{l<=L} e^{-t mu_l} (Q_{l-1}(cos) - Q_{l+1}(cos)).
// F(0) = 0 and F(pi) = 1 hold structurally (all l >= 1 terms cancel at the
// endpoints), so no renormalization is needed here.
class BmCdf {
 public:
  BmCdf(double t, int L) : weights_(static_cast<std::size_t>(L) + 1) {
    for (int l = 0; l <= L; ++l) weights_[l] = std::exp(-t * eigenvalue(l));
  }

  double operator()(double theta) const {
    int L = static_cast<int>(weights_.size()) - 1;
    legendre_all(L + 1, std::cos(theta), buf_);
    KahanSum acc;
    for (int l = 0; l <= L; ++l) {
      double qm1 = (l == 0) ? 1.0 : buf_[l - 1];
      acc.add(weights_[l] * (qm1 - buf_[l + 1]));
    }
    return 0.5 * acc.value();
  }

 private:
  std::vector<double> weights_;
  mutable std::vector<double> buf_;
};

double invert_cdf(const BmCdf& cdf, double u) {
  double lo = 0.0, hi = std::numbers::pi;
  for (int i = 0; i < 62; ++i) {
    double mid = 0.5 * (lo + hi);
    (cdf(mid) < u ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

int required_bandlimit(double t) {
  if (!(t > 0.0)) throw std::invalid_argument("required_bandlimit: t must be > 0");
  const double log_eps = std::log(1e-12);
  for (int L = 1; L <= kMaxSeriesDegree; ++L)
    if (std::log(2.0 * L + 1.0) - t * eigenvalue(L) < log_eps) return L;
  throw std::domain_error("bm transition: t too small for the series; use the small-time sampler");
}

double bm_angle_cdf_value(double t, int L_trunc, double theta) {
  if (!(t > 0.0)) throw std::invalid_argument("bm_angle_cdf_value: t must be > 0");
  if (L_trunc < 0) throw std::invalid_argument("bm_angle_cdf_value: L_trunc must be >= 0");
  return BmCdf(t, L_trunc)(theta);
}

BmAngleTable bm_angle_cdf(double t, int L_trunc) {
  if (!(t > 0.0)) throw std::invalid_argument("bm_angle_cdf: t must be > 0");
  if (L_trunc < 0 || L_trunc > kMaxSeriesDegree)
    throw std::invalid_argument("bm_angle_cdf: L_trunc out of range");

  BmAngleTable tab;
  tab.t = t;
  tab.bandlimit = L_trunc;
  const int n = kTableIntervals;
  tab.theta.resize(n + 1);
  tab.pdf.resize(n + 1);
  tab.cdf.resize(n + 1);

  std::vector<double> w(static_cast<std::size_t>(L_trunc) + 1);
  for (int l = 0; l <= L_trunc; ++l) w[l] = std::exp(-t * eigenvalue(l));

  std::vector<double> buf;
  for (int i = 0; i <= n; ++i) {
    double theta = std::numbers::pi * i / n;
    tab.theta[i] = theta;
    legendre_all(L_trunc + 1, std::cos(theta), buf);
    KahanSum density, antider;
    for (int l = 0; l <= L_trunc; ++l) {
      density.add((2.0 * l + 1.0) / 2.0 * buf[l] * w[l]);
      antider.add(w[l] * (((l == 0) ? 1.0 : buf[l - 1]) - buf[l + 1]));
    }
    tab.pdf[i] = std::max(0.0, std::sin(theta) * density.value());
    tab.cdf[i] = 0.5 * antider.value();
  }

  // truncation ringing can dent monotonicity at the 1e-10 scale
  tab.cdf.front() = 0.0;
  for (int i = 1; i <= n; ++i) tab.cdf[i] = std::max(tab.cdf[i], tab.cdf[i - 1]);
  double total = tab.cdf.back();
  if (!(total > 0.0)) throw std::runtime_error("bm_angle_cdf: degenerate table");
  for (double& v : tab.cdf) v /= total;

  double m = tab.mass();
  for (double& v : tab.pdf) v /= m;
  return tab;
}

BmAngleTable bm_angle_cdf(double t) { return bm_angle_cdf(t, required_bandlimit(t)); }

double BmAngleTable::sample(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("BmAngleTable::sample: u outside [0,1]");
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.begin()) return theta.front();
  if (it == cdf.end()) return theta.back();
  std::size_t k = static_cast<std::size_t>(it - cdf.begin()) - 1;
  double span = cdf[k + 1] - cdf[k];
  double frac = span > 0.0 ? (u - cdf[k]) / span : 0.0;
  return theta[k] + frac * (theta[k + 1] - theta[k]);
}

double BmAngleTable::mass() const {
  // composite Simpson over the even number of intervals
  double h = theta[1] - theta[0];
  KahanSum acc;
  acc.add(pdf.front());
  acc.add(pdf.back());
  for (std::size_t i = 1; i + 1 < pdf.size(); ++i) acc.add((i % 2 ? 4.0 : 2.0) * pdf[i]);
  return acc.value() * h / 3.0;
}

double BmAngleTable::moment(int l) const {
  if (l < 0) throw std::invalid_argument("BmAngleTable::moment: l must be >= 0");
  double h = theta[1] - theta[0];
  KahanSum acc;
  for (std::size_t i = 0; i < pdf.size(); ++i) {
    double g = legendre(l, std::cos(theta[i])) * pdf[i];
    double w = (i == 0 || i + 1 == pdf.size()) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc.add(w * g);
  }
  return acc.value() * h / 3.0;
}

SpherePoint sample_bm_step(const SpherePoint& x, double t, RngStream& rng) {
  if (!(t > 0.0)) throw std::invalid_argument("sample_bm_step: t must be > 0");
  double angle;
  if (t < kSmallTimeCrossover) {
    // exponential map of a plane Gaussian with per-coordinate variance 2t
    double n1 = rng.normal();
    double n2 = rng.normal();
    angle = std::min(std::sqrt(2.0 * t) * std::hypot(n1, n2), std::numbers::pi);
  } else {
    BmCdf cdf(t, required_bandlimit(t));
    angle = invert_cdf(cdf, rng.uniform01());
  }
  double azimuth = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return move_along(x, angle, azimuth);
}

WalkPath sample_subordinate_path(const SpherePoint& x, const LaplaceExponent& psi,
                                 const std::vector<double>& times, RngStream& rng) {
  WalkPath path;
  path.start = x;
  path.times = times;
  path.positions.reserve(times.size());
  double prev = 0.0;
  SpherePoint pos = x;
  for (double t : times) {
    if (!(t > prev))
      throw std::invalid_argument("sample_subordinate_path: times must be strictly increasing and positive");
    double dd = sample_subordinator(psi, t - prev, rng);
    if (dd > 0.0) pos = sample_bm_step(pos, dd, rng);
    path.positions.push_back(pos);
    prev = t;
  }
  return path;
}

namespace {

// Deterministic parallel replication: slot per index, ordered reduction.
template <typename Body>
McEstimate replicate(int n, const Body& body) {
  if (n < 100) throw std::invalid_argument("mc estimator: need n >= 100");
  std::vector<double> slots(static_cast<std::size_t>(n));
  parallel_for(slots.size(), [&](std::size_t i) { slots[i] = body(i); });
  auto st = sample_stats(slots);
  return {st.mean, st.std_error, st.n};
}

SpherePoint walk_to(const SpherePoint& x, const LaplaceExponent& psi, double t, RngStream& r) {
  if (t <= 0.0) return x;
  return sample_subordinate_path(x, psi, {t}, r).positions.back();
}

}  // namespace

McEstimate mc_cov_space(const PowerSpectrum& s, const LaplaceExponent& psi, const SpherePoint& x,
                        const SpherePoint& y, double t1, double t2, int n,
                        const RngStream& rng) {
  if (!(t1 >= 0.0) || !(t2 >= 0.0)) throw std::invalid_argument("mc_cov_space: times must be >= 0");
  if (angular_distance(x, y) <= 1e-9)
    throw std::invalid_argument("mc_cov_space: x and y coincide; use mc_cov_time");
  return replicate(n, [&](std::size_t i) {
    RngStream r = rng.derive(0x636f7653u, i);
    HarmonicCoefficients c = sample_field(s, r);
    SpherePoint px = walk_to(x, psi, t1, r);
    SpherePoint py = walk_to(y, psi, t2, r);
    return evaluate_field(c, px) * evaluate_field(c, py);
  });
}

McEstimate mc_cov_time(const PowerSpectrum& s, const LaplaceExponent& psi, const SpherePoint& x,
                       double t1, double t2, int n, const RngStream& rng) {
  if (!(t1 >= 0.0) || t2 < t1) throw std::invalid_argument("mc_cov_time: need 0 <= t1 <= t2");
  return replicate(n, [&](std::size_t i) {
    RngStream r = rng.derive(0x636f7654u, i);
    HarmonicCoefficients c = sample_field(s, r);
    std::vector<double> ts;
    if (t1 > 0.0) ts.push_back(t1);
    if (t2 > t1) ts.push_back(t2);
    SpherePoint p1 = x, p2 = x;
    if (!ts.empty()) {
      WalkPath path = sample_subordinate_path(x, psi, ts, r);
      p1 = (t1 > 0.0) ? path.positions.front() : x;
      p2 = path.positions.back();
    }
    return evaluate_field(c, p1) * evaluate_field(c, p2);
  });
}

}
