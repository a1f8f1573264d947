#pragma once

#include <vector>

namespace sphaera {

// Spherical Laplacian eigenvalue on degree-l harmonics.
inline double eigenvalue(int l) { return static_cast<double>(l) * (l + 1.0); }

// Clamp z into [-1, 1]; values beyond 1e-12 outside are a domain error.
double clamp_to_unit(double z);

// Legendre polynomial P_l(z) by the three-term recurrence.
double legendre(int l, double z);

// Fills out[0..lmax] with P_0(z)..P_lmax(z).
void legendre_all(int lmax, double z, std::vector<double>& out);

// Fully normalized associated Legendre column at fixed order m:
// out[k] = Pbar_{m+k}^m(x) for k = 0..(lmax-m), where
// Y_lm(theta, phi) = Pbar_l^m(cos theta) e^{i m phi} and the Condon-Shortley
// phase is folded into Pbar.  Ascending-l recurrence on the normalized
// values; the sectoral start is built multiplicatively, so it stays finite
// far beyond the degrees where factorial ratios overflow.
void normalized_assoc_column(int m, int lmax, double x, std::vector<double>& out);

}
