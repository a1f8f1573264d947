#include "core/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/quadrature.hpp"
#include "core/stats.hpp"

namespace sphaera {

double SphereGrid::phi(int j) const {
  return 2.0 * std::numbers::pi * j / nphi;
}

SphereGrid make_grid(int bandlimit) {
  if (bandlimit < 0) throw std::invalid_argument("make_grid: bandlimit must be >= 0");
  SphereGrid g;
  g.bandlimit = bandlimit;
  int ntheta = bandlimit + 1;
  g.nphi = 2 * bandlimit + 1;
  auto rule = gauss_legendre(ntheta);
  g.theta.resize(ntheta);
  g.cos_theta.resize(ntheta);
  g.weight.resize(ntheta);
  for (int i = 0; i < ntheta; ++i) {
    // rule nodes ascend; theta = acos descends, so reverse for ascending theta
    double x = rule.nodes[ntheta - 1 - i];
    g.cos_theta[i] = x;
    g.theta[i] = std::acos(x);
    g.weight[i] = rule.weights[ntheta - 1 - i];
  }
  return g;
}

FieldMap make_map(const SphereGrid& grid) {
  FieldMap m;
  m.grid = grid;
  m.values.assign(static_cast<std::size_t>(grid.ntheta()) * grid.nphi, 0.0);
  return m;
}

double integrate_map(const FieldMap& map) {
  const auto& g = map.grid;
  double dphi = 2.0 * std::numbers::pi / g.nphi;
  KahanSum acc;
  for (int i = 0; i < g.ntheta(); ++i) {
    KahanSum row;
    for (int j = 0; j < g.nphi; ++j) row.add(map.at(i, j));
    acc.add(g.weight[i] * dphi * row.value());
  }
  return acc.value();
}

}
