#pragma once

#include <vector>

#include "core/geometry.hpp"

namespace sphaera {

// Quadrature grid: Gauss-Legendre nodes in cos(theta) crossed with uniform
// longitudes.  With ntheta >= L+1 and nphi >= 2L+1 the associated transform
// pair is exact on fields band-limited at L.
struct SphereGrid {
  int bandlimit = 0;
  std::vector<double> theta;      // ascending
  std::vector<double> cos_theta;  // descending, Gauss-Legendre nodes
  std::vector<double> weight;     // Gauss-Legendre weights (sum to 2)
  int nphi = 0;

  int ntheta() const { return static_cast<int>(theta.size()); }
  double phi(int j) const;
  SpherePoint point(int i, int j) const { return {theta[i], phi(j)}; }
};

SphereGrid make_grid(int bandlimit);

// Scalar samples on a SphereGrid, row-major theta-then-phi.
struct FieldMap {
  SphereGrid grid;
  std::vector<double> values;

  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.nphi + j]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.nphi + j]; }
};

FieldMap make_map(const SphereGrid& grid);

// Area-weighted integral over the sphere of the mapped samples.
double integrate_map(const FieldMap& map);

}
