#include "core/transform.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "core/legendre.hpp"
#include "core/threads.hpp"

namespace sphaera {

namespace {

// Triangular table of Pbar_l^m(cos theta_i) for one grid row, same layout as
// HarmonicCoefficients::index.
void row_plm_table(double x, int L, std::vector<double>& table) {
  table.resize(HarmonicCoefficients::index(L, L) + 1);
  std::vector<double> col;
  for (int m = 0; m <= L; ++m) {
    normalized_assoc_column(m, L, x, col);
    for (int l = m; l <= L; ++l) table[HarmonicCoefficients::index(l, m)] = col[l - m];
  }
}

}  // namespace

HarmonicCoefficients analyze(const FieldMap& map, int L) {
  const SphereGrid& g = map.grid;
  if (L < 0) throw std::invalid_argument("analyze: bandlimit must be >= 0");
  if (g.bandlimit < L)
    throw std::invalid_argument("analyze: grid resolution insufficient for requested bandlimit");

  const int ntheta = g.ntheta();
  const int nphi = g.nphi;
  const double dphi = 2.0 * std::numbers::pi / nphi;

  // F_m(theta_i) = dphi * sum_j f_ij e^{-i m phi_j}, m = 0..L
  std::vector<std::complex<double>> fm(static_cast<std::size_t>(ntheta) * (L + 1));
  parallel_for(ntheta, [&](std::size_t i) {
    std::vector<std::complex<double>> acc(L + 1, {0.0, 0.0});
    for (int j = 0; j < nphi; ++j) {
      const double f = map.at(static_cast<int>(i), j);
      const double ph = g.phi(j);
      const std::complex<double> w(std::cos(ph), -std::sin(ph));
      std::complex<double> cur(1.0, 0.0);
      for (int m = 0; m <= L; ++m) {
        acc[m] += f * cur;
        cur *= w;
      }
    }
    for (int m = 0; m <= L; ++m) fm[i * (L + 1) + m] = dphi * acc[m];
  });

  HarmonicCoefficients out(L);
  std::vector<std::vector<double>> tables(ntheta);
  parallel_for(ntheta, [&](std::size_t i) { row_plm_table(g.cos_theta[i], L, tables[i]); });

  for (int m = 0; m <= L; ++m) {
    for (int l = m; l <= L; ++l) {
      std::complex<double> a(0.0, 0.0);
      const std::size_t idx = HarmonicCoefficients::index(l, m);
      for (int i = 0; i < ntheta; ++i)
        a += g.weight[i] * tables[i][idx] * fm[static_cast<std::size_t>(i) * (L + 1) + m];
      out.at(l, m) = a;
    }
  }
  return out;
}

FieldMap synthesize(const HarmonicCoefficients& coeffs, const SphereGrid& grid) {
  const int L = coeffs.bandlimit();
  if (L < 0) throw std::invalid_argument("synthesize: empty coefficients");
  if (grid.bandlimit < L)
    throw std::invalid_argument("synthesize: grid resolution insufficient for coefficients");
  if (coeffs.reality_defect() > 1e-9)
    throw std::invalid_argument("synthesize: reality constraint violated (Im a_{l,0} beyond 1e-9)");

  FieldMap map = make_map(grid);
  const int nphi = grid.nphi;
  parallel_for(grid.ntheta(), [&](std::size_t i) {
    std::vector<double> table;
    row_plm_table(grid.cos_theta[i], L, table);
    // g_m = sum_l a_lm Pbar_l^m
    std::vector<std::complex<double>> gm(L + 1, {0.0, 0.0});
    for (int m = 0; m <= L; ++m)
      for (int l = m; l <= L; ++l)
        gm[m] += coeffs.at(l, m) * table[HarmonicCoefficients::index(l, m)];
    for (int j = 0; j < nphi; ++j) {
      const double ph = grid.phi(j);
      const std::complex<double> w(std::cos(ph), std::sin(ph));
      std::complex<double> cur = w;
      double v = gm[0].real();
      for (int m = 1; m <= L; ++m) {
        v += 2.0 * (gm[m] * cur).real();
        cur *= w;
      }
      map.at(static_cast<int>(i), j) = v;
    }
  });
  return map;
}

}
