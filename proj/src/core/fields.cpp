#include "core/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "core/legendre.hpp"
#include "core/spectrum.hpp"
#include "core/stats.hpp"

namespace sphaera {

HarmonicCoefficients::HarmonicCoefficients(int bandlimit) : bandlimit_(bandlimit) {
  if (bandlimit < 0) throw std::invalid_argument("HarmonicCoefficients: bandlimit must be >= 0");
  data_.assign(index(bandlimit, bandlimit) + 1, {0.0, 0.0});
}

void HarmonicCoefficients::check_lm(int l, int m) const {
  if (l < 0 || l > bandlimit_ || m < 0 || m > l)
    throw std::invalid_argument("HarmonicCoefficients: (l, m) out of range");
}

std::complex<double>& HarmonicCoefficients::at(int l, int m) {
  check_lm(l, m);
  return data_[index(l, m)];
}

const std::complex<double>& HarmonicCoefficients::at(int l, int m) const {
  check_lm(l, m);
  return data_[index(l, m)];
}

std::complex<double> HarmonicCoefficients::full(int l, int m) const {
  if (m >= 0) return at(l, m);
  std::complex<double> a = std::conj(at(l, -m));
  return ((-m) & 1) ? -a : a;
}

double HarmonicCoefficients::reality_defect() const {
  double worst = 0.0;
  for (int l = 0; l <= bandlimit_; ++l)
    worst = std::max(worst, std::abs(data_[index(l, 0)].imag()));
  return worst;
}

HarmonicCoefficients sample_field(const PowerSpectrum& spectrum, RngStream& rng) {
  const int L = spectrum.bandlimit;
  HarmonicCoefficients c(L);
  for (int l = 0; l <= L; ++l) {
    const double cl = spectrum.at(l);
    if (cl < 0.0) throw std::invalid_argument("sample_field: negative spectrum value");
    const double sigma = std::sqrt(cl);
    c.at(l, 0) = {sigma * rng.normal(), 0.0};
    const double shalf = sigma / std::sqrt(2.0);
    for (int m = 1; m <= l; ++m) c.at(l, m) = {shalf * rng.normal(), shalf * rng.normal()};
  }
  return c;
}

double frequency_component(const HarmonicCoefficients& c, int l, const SpherePoint& x) {
  if (l < 0 || l > c.bandlimit())
    throw std::invalid_argument("frequency_component: l out of range");
  const double ct = std::cos(x.theta);
  std::vector<double> col;
  KahanSum acc;
  normalized_assoc_column(0, l, ct, col);
  acc.add(c.at(l, 0).real() * col[l]);
  for (int m = 1; m <= l; ++m) {
    normalized_assoc_column(m, l, ct, col);
    const std::complex<double> e(std::cos(m * x.phi), std::sin(m * x.phi));
    acc.add(2.0 * (c.at(l, m) * e).real() * col[l - m]);
  }
  return acc.value();
}

double evaluate_field(const HarmonicCoefficients& c, const SpherePoint& x) {
  const int L = c.bandlimit();
  const double ct = std::cos(x.theta);
  std::vector<double> col;
  KahanSum acc;
  for (int m = 0; m <= L; ++m) {
    normalized_assoc_column(m, L, ct, col);
    std::complex<double> gm(0.0, 0.0);
    for (int l = m; l <= L; ++l) gm += c.at(l, m) * col[l - m];
    if (m == 0) {
      acc.add(gm.real());
    } else {
      const std::complex<double> e(std::cos(m * x.phi), std::sin(m * x.phi));
      acc.add(2.0 * (gm * e).real());
    }
  }
  return acc.value();
}

PowerSpectrum estimate_spectrum(const HarmonicCoefficients& c) {
  PowerSpectrum s;
  s.bandlimit = c.bandlimit();
  s.family = SpectrumFamily::Tabulated;
  s.cl.resize(s.bandlimit + 1);
  for (int l = 0; l <= s.bandlimit; ++l) {
    KahanSum acc;
    acc.add(std::norm(c.at(l, 0)));
    for (int m = 1; m <= l; ++m) acc.add(2.0 * std::norm(c.at(l, m)));
    s.cl[l] = acc.value() / (2.0 * l + 1.0);
  }
  return s;
}

}
