#include "core/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/stats.hpp"

namespace sphaera {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;  // initial guesses start near +1; store ascending
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

namespace {
const GaussLegendreRule& rule32() {
  static const GaussLegendreRule r = gauss_legendre(32);
  return r;
}
}

double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& edges) {
  if (edges.size() < 2) throw std::invalid_argument("integrate_panels: need >= 2 edges");
  const auto& r = rule32();
  KahanSum acc;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    double a = edges[p], b = edges[p + 1];
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      acc.add(h * r.weights[i] * f(c + h * r.nodes[i]));
  }
  return acc.value();
}

std::vector<double> uniform_edges(double a, double b, int panels) {
  if (panels < 1) throw std::invalid_argument("uniform_edges: panels must be >= 1");
  std::vector<double> e(panels + 1);
  for (int i = 0; i <= panels; ++i) e[i] = a + (b - a) * i / panels;
  return e;
}

}
