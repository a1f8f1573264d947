#pragma once

namespace sphaera {

// E_alpha(z) = sum_j z^j / Gamma(alpha j + 1) for alpha in (0, 1], z <= 0.
//
// Near the origin a Kahan-summed power series; once the alternating series
// starts losing digits (|z|^(1/alpha) grows like the log of its largest
// term) the Pollard spectral representation takes over:
//   E_alpha(-x) = sin(alpha pi)/(pi alpha) *
//                 Int_0^inf exp(-(s x)^(1/alpha)) / ((s+cos(alpha pi))^2 + sin^2(alpha pi)) ds.
// Branches agree to ~1e-10 at the switch.
double mittag_leffler(double alpha, double z);

}
