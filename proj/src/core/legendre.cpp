#include "core/legendre.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphaera {

double clamp_to_unit(double z) {
  if (!(std::abs(z) <= 1.0 + 1e-12))
    throw std::domain_error("legendre: argument must lie in [-1, 1]");
  return std::min(1.0, std::max(-1.0, z));
}

double legendre(int l, double z) {
  if (l < 0) throw std::invalid_argument("legendre: degree must be >= 0");
  z = clamp_to_unit(z);
  if (l == 0) return 1.0;
  double p0 = 1.0, p1 = z;
  for (int k = 1; k < l; ++k) {
    double p2 = ((2.0 * k + 1.0) * z * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

void legendre_all(int lmax, double z, std::vector<double>& out) {
  if (lmax < 0) throw std::invalid_argument("legendre_all: lmax must be >= 0");
  z = clamp_to_unit(z);
  out.resize(lmax + 1);
  out[0] = 1.0;
  if (lmax == 0) return;
  out[1] = z;
  for (int k = 1; k < lmax; ++k)
    out[k + 1] = ((2.0 * k + 1.0) * z * out[k] - k * out[k - 1]) / (k + 1.0);
}

void normalized_assoc_column(int m, int lmax, double x, std::vector<double>& out) {
  if (m < 0) throw std::invalid_argument("normalized_assoc_column: m must be >= 0");
  if (lmax < m) throw std::invalid_argument("normalized_assoc_column: lmax must be >= m");
  x = clamp_to_unit(x);
  out.resize(lmax - m + 1);

  double somx2 = std::sqrt((1.0 - x) * (1.0 + x));  // sin(theta)
  // Pbar_m^m = (-1)^m sqrt(1/(4pi)) prod_{k=1..m} sqrt((2k+1)/(2k)) sin(theta)
  double pmm = std::sqrt(1.0 / (4.0 * std::numbers::pi));
  for (int k = 1; k <= m; ++k) pmm *= std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * somx2;
  if (m & 1) pmm = -pmm;
  out[0] = pmm;
  if (lmax == m) return;

  double pmmp1 = x * std::sqrt(2.0 * m + 3.0) * pmm;
  out[1] = pmmp1;
  double oldfact = std::sqrt(2.0 * m + 3.0);
  for (int l = m + 2; l <= lmax; ++l) {
    double fact = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
    double pll = (x * pmmp1 - pmm / oldfact) * fact;
    oldfact = fact;
    pmm = pmmp1;
    pmmp1 = pll;
    out[l - m] = pll;
  }
}

}
