#include "core/sph_harm.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/legendre.hpp"
#include "core/stats.hpp"

namespace sphaera {

std::complex<double> sph_harm(int l, int m, const SpherePoint& p) {
  if (l < 0) throw std::invalid_argument("sph_harm: l must be >= 0");
  int am = std::abs(m);
  if (am > l) throw std::invalid_argument("sph_harm: |m| must be <= l");
  std::vector<double> col;
  normalized_assoc_column(am, l, std::cos(p.theta), col);
  double plm = col.back();
  std::complex<double> e(std::cos(am * p.phi), std::sin(am * p.phi));
  std::complex<double> y = plm * e;
  if (m < 0) {
    y = std::conj(y);
    if (am & 1) y = -y;
  }
  return y;
}

double addition_sum(int l, const SpherePoint& x, const SpherePoint& y) {
  if (l < 0) throw std::invalid_argument("addition_sum: l must be >= 0");
  KahanSum acc;
  for (int m = -l; m <= l; ++m) {
    std::complex<double> t = sph_harm(l, m, x) * std::conj(sph_harm(l, m, y));
    acc.add(t.real());
  }
  return acc.value();
}

}
