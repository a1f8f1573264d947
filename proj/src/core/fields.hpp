#pragma once

#include <complex>
#include <vector>

#include "core/geometry.hpp"
#include "core/rng.hpp"

namespace sphaera {

struct PowerSpectrum;

// Harmonic coefficients of a real-valued field, stored for m >= 0 only.
// The m < 0 entries are implied by a_{l,-m} = (-1)^m conj(a_{l,m}); a_{l,0}
// is kept real by construction and checked where it matters.
class HarmonicCoefficients {
 public:
  HarmonicCoefficients() = default;
  explicit HarmonicCoefficients(int bandlimit);

  int bandlimit() const { return bandlimit_; }
  std::size_t stored_count() const { return data_.size(); }

  // m in [0, l]
  std::complex<double>& at(int l, int m);
  const std::complex<double>& at(int l, int m) const;

  // any m in [-l, l], negative orders resolved through the reality relation
  std::complex<double> full(int l, int m) const;

  const std::vector<std::complex<double>>& data() const { return data_; }
  std::vector<std::complex<double>>& data() { return data_; }

  // Largest |Im a_{l,0}|; must stay < 1e-9 for a field to be real.
  double reality_defect() const;

  static std::size_t index(int l, int m) {
    return static_cast<std::size_t>(l) * (l + 1) / 2 + m;
  }

 private:
  void check_lm(int l, int m) const;
  int bandlimit_ = -1;
  std::vector<std::complex<double>> data_;
};

// Draw coefficients of a centered isotropic Gaussian field:
// a_{l,0} ~ N(0, C_l) real; Re/Im a_{l,m} ~ N(0, C_l/2) for m > 0.
HarmonicCoefficients sample_field(const PowerSpectrum& spectrum, RngStream& rng);

// Degree-l component sum_{|m|<=l} a_lm Y_lm(x); real for reality-constrained
// coefficients.
double frequency_component(const HarmonicCoefficients& c, int l, const SpherePoint& x);

// Pointwise field value sum_l frequency_component.
double evaluate_field(const HarmonicCoefficients& c, const SpherePoint& x);

// Chat_l = (2l+1)^{-1} sum_{|m|<=l} |a_lm|^2, returned as a tabulated spectrum.
PowerSpectrum estimate_spectrum(const HarmonicCoefficients& c);

}
