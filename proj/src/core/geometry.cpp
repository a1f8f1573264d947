#include "core/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphaera {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

SpherePoint make_point(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw std::invalid_argument("SpherePoint: theta must lie in [0, pi]");
  if (!std::isfinite(phi)) throw std::invalid_argument("SpherePoint: phi must be finite");
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  return {theta, phi};
}

std::array<double, 3> to_cartesian(const SpherePoint& p) {
  double st = std::sin(p.theta);
  return {st * std::cos(p.phi), st * std::sin(p.phi), std::cos(p.theta)};
}

SpherePoint from_cartesian(const std::array<double, 3>& v) {
  double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (!(n > 0.0)) throw std::invalid_argument("from_cartesian: zero vector");
  // atan2 form stays accurate near the poles where acos(z) loses ~8 digits
  double theta = std::atan2(std::hypot(v[0], v[1]), v[2]);
  double phi = std::atan2(v[1], v[0]);
  if (phi < 0.0) phi += kTwoPi;
  return {theta, phi};
}

double inner(const SpherePoint& x, const SpherePoint& y) {
  auto a = to_cartesian(x), b = to_cartesian(y);
  double c = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  return std::min(1.0, std::max(-1.0, c));
}

double angular_distance(const SpherePoint& x, const SpherePoint& y) {
  return std::acos(inner(x, y));
}

SpherePoint move_along(const SpherePoint& x, double theta, double psi) {
  auto n = to_cartesian(x);
  // Branchless orthonormal tangent frame (Duff et al. 2017).
  double s = std::copysign(1.0, n[2]);
  double a = -1.0 / (s + n[2]);
  double b = n[0] * n[1] * a;
  std::array<double, 3> u = {1.0 + s * n[0] * n[0] * a, s * b, -s * n[0]};
  std::array<double, 3> v = {b, s + n[1] * n[1] * a, -n[1]};
  double ct = std::cos(theta), st = std::sin(theta);
  double cp = std::cos(psi), sp = std::sin(psi);
  std::array<double, 3> y;
  for (int i = 0; i < 3; ++i) y[i] = ct * n[i] + st * (cp * u[i] + sp * v[i]);
  return from_cartesian(y);
}

}
