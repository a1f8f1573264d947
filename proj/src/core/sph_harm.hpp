#pragma once

#include <complex>

#include "core/geometry.hpp"

namespace sphaera {

// Y_lm with Condon-Shortley phase; m may be negative
// (Y_{l,-m} = (-1)^m conj(Y_{l,m})).
std::complex<double> sph_harm(int l, int m, const SpherePoint& p);

// sum_{|m| <= l} Y_lm(x) conj(Y_lm(y)); equals (2l+1)/(4pi) P_l(<x,y>).
double addition_sum(int l, const SpherePoint& x, const SpherePoint& y);

}
