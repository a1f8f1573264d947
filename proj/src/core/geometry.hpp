#pragma once

#include <array>

namespace sphaera {

// Point on the unit sphere, colatitude theta in [0, pi], longitude phi in [0, 2pi).
struct SpherePoint {
  double theta = 0.0;
  double phi = 0.0;
};

SpherePoint make_point(double theta, double phi);  // validates ranges

std::array<double, 3> to_cartesian(const SpherePoint& p);
SpherePoint from_cartesian(const std::array<double, 3>& v);  // normalizes

// cos of the central angle between x and y.
double inner(const SpherePoint& x, const SpherePoint& y);

double angular_distance(const SpherePoint& x, const SpherePoint& y);

// Move from x along the great circle at tangent azimuth psi by angle theta.
SpherePoint move_along(const SpherePoint& x, double theta, double psi);

inline SpherePoint north_pole() { return {0.0, 0.0}; }

}
