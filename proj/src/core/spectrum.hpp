#pragma once

#include <string>
#include <vector>

namespace sphaera {

struct LaplaceExponent;

enum class SpectrumFamily { PowerLaw, Damped, Tabulated };

// Angular power spectrum truncated at a bandlimit, together with the
// parametric family it came from so tail estimates stay available.
struct PowerSpectrum {
  int bandlimit = 0;
  std::vector<double> cl;  // size bandlimit+1
  SpectrumFamily family = SpectrumFamily::Tabulated;
  // family parameters (PowerLaw: amp, decay; Damped: amp, decay, nu, c)
  double amp = 0.0;
  double decay = 0.0;
  double nu = 0.0;
  double c = 0.0;

  double at(int l) const;
};

// A truncated series value plus an analytic bound/estimate for what the
// truncation discarded from the parametric family.
struct SeriesValue {
  double value = 0.0;
  double tail = 0.0;
};

// C_l = amp (1+l)^{-decay}; requires decay > 2.
PowerSpectrum power_law_spectrum(double amp, double decay, int bandlimit);

// C_l = amp (1+l)^{-decay} exp(-c l^nu); if nu*c == 0 requires decay > 2.
PowerSpectrum damped_spectrum(double amp, double decay, double nu, double c, int bandlimit);

// sum_{l<=L} (2l+1)/(4pi) C_l with the family tail reported alongside.
SeriesValue field_variance(const PowerSpectrum& s);

// Tail of sum_{l>L} (2l+1)/(4pi) C_l for the parametric families
// (midpoint integral comparison for power laws, one-term geometric bound
// for exponentially damped ones); 0 for tabulated spectra.
double spectrum_tail(const PowerSpectrum& s);

// C_l exp(-2 t Psi(mu_l)); the result is tabulated.
PowerSpectrum effective_spectrum(const PowerSpectrum& s, const LaplaceExponent& psi, double t);

enum class DependenceRange { Short, Long };

struct DependenceSum {
  double value = 0.0;  // +inf for l = 0
  DependenceRange range = DependenceRange::Short;
};

// sum_{tau>=1} (2l+1)/(4pi) C_l exp(-tau Psi(mu_l))
//   = (2l+1)/(4pi) C_l / (e^{Psi(mu_l)} - 1).
DependenceSum dependence_sum(const PowerSpectrum& s, const LaplaceExponent& psi, int l);

// "power:A=1,gamma=3" | "damped:A=1,theta=3,nu=0.5,c=2"
PowerSpectrum parse_spectrum_spec(const std::string& spec, int bandlimit);
std::string spectrum_spec_string(const PowerSpectrum& s);

}
