#include "core/spectrum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "core/kv_spec.hpp"
#include "core/legendre.hpp"
#include "core/stats.hpp"
#include "core/subordinator.hpp"

namespace sphaera {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

double damped_term(double amp, double decay, double nu, double c, double l) {
  return amp * (2.0 * l + 1.0) * std::pow(1.0 + l, -decay) * std::exp(-c * std::pow(l, nu));
}

// Midpoint-rule integral comparison for sum_{l>L} (2l+1) (1+l)^{-decay}:
// the summand is convex and decreasing, so the integral from L+1/2 is an
// upper bound, and it tracks the true tail to O(f''(L)).
double power_tail(double amp, double decay, int L) {
  double y0 = 1.0 + L + 0.5;
  return amp / kFourPi *
         (2.0 * std::pow(y0, 2.0 - decay) / (decay - 2.0) -
          std::pow(y0, 1.0 - decay) / (decay - 1.0));
}

}  // namespace

double PowerSpectrum::at(int l) const {
  if (l < 0 || l > bandlimit) throw std::invalid_argument("PowerSpectrum: l out of range");
  return cl[l];
}

PowerSpectrum power_law_spectrum(double amp, double decay, int bandlimit) {
  if (bandlimit < 0) throw std::invalid_argument("power_law_spectrum: bandlimit must be >= 0");
  if (!(amp >= 0.0)) throw std::invalid_argument("power_law_spectrum: amplitude must be >= 0");
  if (!(decay > 2.0))
    throw std::invalid_argument("power_law_spectrum: decay must exceed 2 for a summable spectrum");
  PowerSpectrum s;
  s.bandlimit = bandlimit;
  s.family = SpectrumFamily::PowerLaw;
  s.amp = amp;
  s.decay = decay;
  s.cl.resize(bandlimit + 1);
  for (int l = 0; l <= bandlimit; ++l) s.cl[l] = amp * std::pow(1.0 + l, -decay);
  return s;
}

PowerSpectrum damped_spectrum(double amp, double decay, double nu, double c, int bandlimit) {
  if (bandlimit < 0) throw std::invalid_argument("damped_spectrum: bandlimit must be >= 0");
  if (!(amp >= 0.0)) throw std::invalid_argument("damped_spectrum: amplitude must be >= 0");
  if (!(nu >= 0.0 && nu <= 1.0)) throw std::invalid_argument("damped_spectrum: nu must lie in [0, 1]");
  if (!(c >= 0.0)) throw std::invalid_argument("damped_spectrum: c must be >= 0");
  if (nu * c == 0.0 && !(decay > 2.0))
    throw std::invalid_argument(
        "damped_spectrum: without exponential damping (nu*c == 0) decay must exceed 2");
  PowerSpectrum s;
  s.bandlimit = bandlimit;
  s.family = SpectrumFamily::Damped;
  s.amp = amp;
  s.decay = decay;
  s.nu = nu;
  s.c = c;
  s.cl.resize(bandlimit + 1);
  for (int l = 0; l <= bandlimit; ++l)
    s.cl[l] = amp * std::pow(1.0 + l, -decay) * std::exp(-c * std::pow(static_cast<double>(l), nu));
  return s;
}

double spectrum_tail(const PowerSpectrum& s) {
  switch (s.family) {
    case SpectrumFamily::Tabulated:
      return 0.0;
    case SpectrumFamily::PowerLaw:
      return power_tail(s.amp, s.decay, s.bandlimit);
    case SpectrumFamily::Damped: {
      if (s.nu * s.c == 0.0) {
        double factor = (s.nu == 0.0) ? std::exp(-s.c) : 1.0;
        return factor * power_tail(s.amp, s.decay, s.bandlimit);
      }
      // One-term geometric bound off the first discarded term.
      double t1 = damped_term(s.amp, s.decay, s.nu, s.c, s.bandlimit + 1.0) / kFourPi;
      double t2 = damped_term(s.amp, s.decay, s.nu, s.c, s.bandlimit + 2.0) / kFourPi;
      if (t1 <= 0.0) return 0.0;
      double r = t2 / t1;
      if (r < 0.9999) return t1 / (1.0 - r);
      if (s.decay > 2.0)
        return std::exp(-s.c * std::pow(s.bandlimit + 1.0, s.nu)) * power_tail(s.amp, s.decay, s.bandlimit);
      return std::numeric_limits<double>::infinity();
    }
  }
  return 0.0;
}

SeriesValue field_variance(const PowerSpectrum& s) {
  KahanSum acc;
  for (int l = 0; l <= s.bandlimit; ++l) acc.add((2.0 * l + 1.0) / kFourPi * s.cl[l]);
  return {acc.value(), spectrum_tail(s)};
}

PowerSpectrum effective_spectrum(const PowerSpectrum& s, const LaplaceExponent& lam, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("effective_spectrum: t must be >= 0");
  PowerSpectrum out = s;
  out.family = SpectrumFamily::Tabulated;
  out.amp = out.decay = out.nu = out.c = 0.0;
  for (int l = 0; l <= s.bandlimit; ++l)
    out.cl[l] = s.cl[l] * std::exp(-2.0 * t * psi(lam, eigenvalue(l)));
  return out;
}

DependenceSum dependence_sum(const PowerSpectrum& s, const LaplaceExponent& lam, int l) {
  if (l < 0 || l > s.bandlimit) throw std::invalid_argument("dependence_sum: l out of range");
  double p = psi(lam, eigenvalue(l));
  DependenceSum d;
  if (p > 0.0) {
    d.range = DependenceRange::Short;
    d.value = (2.0 * l + 1.0) / kFourPi * s.cl[l] / std::expm1(p);
  } else {
    d.range = DependenceRange::Long;
    d.value = std::numeric_limits<double>::infinity();
  }
  return d;
}

PowerSpectrum parse_spectrum_spec(const std::string& spec, int bandlimit) {
  auto p = detail::parse_kv_spec(spec);
  if (p.head == "power") {
    double amp = detail::take_required(p, "A");
    double decay = detail::take_required(p, "gamma");
    detail::expect_consumed(p);
    return power_law_spectrum(amp, decay, bandlimit);
  }
  if (p.head == "damped") {
    double amp = detail::take_required(p, "A");
    double decay = detail::take_required(p, "theta");
    double nu = detail::take_required(p, "nu");
    double c = detail::take_required(p, "c");
    detail::expect_consumed(p);
    return damped_spectrum(amp, decay, nu, c, bandlimit);
  }
  throw std::invalid_argument("spectrum spec: unknown family '" + p.head + "'");
}

std::string spectrum_spec_string(const PowerSpectrum& s) {
  std::ostringstream os;
  os.precision(17);
  switch (s.family) {
    case SpectrumFamily::PowerLaw:
      os << "power:A=" << s.amp << ",gamma=" << s.decay;
      break;
    case SpectrumFamily::Damped:
      os << "damped:A=" << s.amp << ",theta=" << s.decay << ",nu=" << s.nu << ",c=" << s.c;
      break;
    case SpectrumFamily::Tabulated:
      os << "tabulated";
      break;
  }
  return os.str();
}

}
