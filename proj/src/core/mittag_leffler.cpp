#include "core/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "core/quadrature.hpp"
#include "core/stats.hpp"

namespace sphaera {

namespace {

double ml_series(double alpha, double z) {
  // Terms via exp(j ln|z| - lgamma(alpha j + 1)); stop on term ratio < 1e-16
  // past the largest term.
  const double lz = std::log(std::abs(z));
  KahanSum acc;
  acc.add(1.0);
  double prev = 1.0;
  for (int j = 1; j < 10000; ++j) {
    double t = std::exp(j * lz - std::lgamma(alpha * j + 1.0));
    double signed_t = (z < 0.0 && (j & 1)) ? -t : t;
    acc.add(signed_t);
    if (t < prev && t < 1e-16 * std::max(1.0, std::abs(acc.value()))) break;
    prev = t;
  }
  return acc.value();
}

double ml_spectral(double alpha, double x) {
  const double ca = std::cos(alpha * std::numbers::pi);
  const double sa = std::sin(alpha * std::numbers::pi);
  const double inv_alpha = 1.0 / alpha;
  auto f = [&](double s) {
    double e = std::exp(-std::pow(s * x, inv_alpha));
    double u = s + ca;
    return e / (u * u + sa * sa);
  };
  // exp(-(sx)^(1/alpha)) is negligible past (s x)^(1/alpha) = 45
  double smax = std::pow(45.0, alpha) / x;
  std::vector<double> edges = uniform_edges(0.0, smax, 64);
  // For alpha near 1 the denominator dips to sin^2(alpha pi) at s = -cos(alpha pi);
  // refine panels around the dip.
  double s0 = -ca;
  if (s0 > 0.0 && s0 < smax) {
    for (int k = -8; k <= 8; ++k) {
      double e = s0 + 0.25 * k * sa;
      if (e > 0.0 && e < smax) edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
  }
  return sa / (std::numbers::pi * alpha) * integrate_panels(f, edges);
}

}  // namespace

double mittag_leffler(double alpha, double z) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("mittag_leffler: alpha must be in (0, 1]");
  if (!(z <= 0.0)) throw std::domain_error("mittag_leffler: z must be <= 0");
  if (z == 0.0) return 1.0;
  if (alpha == 1.0) return std::exp(z);
  double x = -z;
  // log of the largest series term is about x^(1/alpha); keep it under ~12
  // so cancellation costs at most ~5 digits.
  bool series_ok = std::pow(x, 1.0 / alpha) <= 12.0 && x <= 5.0;
  return series_ok ? ml_series(alpha, z) : ml_spectral(alpha, x);
}

}
