#pragma once

#include <functional>
#include <vector>

namespace sphaera {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on (-1, 1), ascending
  std::vector<double> weights;  // sum to 2
};

// Newton iteration on P_n; accurate to ~1e-15 for the n used here.
GaussLegendreRule gauss_legendre(int n);

// Composite Gauss-Legendre over consecutive [edges[i], edges[i+1]] panels
// with a fixed 32-node rule per panel.  Deterministic summation order.
double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& edges);

// Uniform edges helper.
std::vector<double> uniform_edges(double a, double b, int panels);

}
