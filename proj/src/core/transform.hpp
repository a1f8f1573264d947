#pragma once

#include "core/fields.hpp"
#include "core/grid.hpp"

namespace sphaera {

// Forward transform: quadrature of map against conj(Y_lm) up to degree L.
// Exact (to rounding) for maps band-limited at the grid bandlimit.
// The m-sum over longitudes is separated from the l-sum, so the cost is
// O(L^3) rather than O(L^4).
HarmonicCoefficients analyze(const FieldMap& map, int L);

// Inverse transform onto the grid.  Errors if the grid cannot carry the
// coefficients or the m=0 coefficients are not real to 1e-9.
FieldMap synthesize(const HarmonicCoefficients& coeffs, const SphereGrid& grid);

}
