#include "core/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphaera {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t mix3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t s = a;
  std::uint64_t k = splitmix64(s);
  s ^= b + 0x9e3779b97f4a7c15ULL;
  k ^= splitmix64(s);
  s ^= c + 0xd1b54a32d192ed03ULL;
  k ^= splitmix64(s);
  return k;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : key_(seed) {
  std::uint64_t s = seed;
  engine_.seed(splitmix64(s));
}

RngStream RngStream::derive(std::uint64_t tag, std::uint64_t index) const {
  return RngStream(mix3(key_, tag, index));
}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform01() {
  // 53-bit mantissa, shifted off zero so log() is always safe.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double RngStream::normal() {
  double u1 = uniform01();
  double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::exponential() { return -std::log(uniform01()); }

double RngStream::gamma(double shape) {
  if (shape < 0.0) throw std::invalid_argument("gamma: shape must be >= 0");
  if (shape == 0.0) return 0.0;
  double boost = 1.0;
  double a = shape;
  if (a < 1.0) {
    // Gamma(a) = Gamma(a+1) * U^(1/a)
    boost = std::exp(std::log(uniform01()) / a);
    a += 1.0;
  }
  double d = a - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = uniform01();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return boost * d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return boost * d * v;
  }
}

double RngStream::positive_stable(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("positive_stable: alpha must be in (0, 1]");
  if (alpha == 1.0) {
    // Degenerate boundary: the unit drift.  Consume the same two uniforms
    // so stream alignment does not depend on alpha.
    uniform01();
    uniform01();
    return 1.0;
  }
  // Kanter (1975): S = (a(th)/E)^((1-alpha)/alpha), th ~ U(0,pi), E ~ Exp(1),
  // a(th) = sin((1-alpha) th) sin(alpha th)^(alpha/(1-alpha)) / sin(th)^(1/(1-alpha)).
  double th = std::numbers::pi * uniform01();
  double e = exponential();
  double ratio = alpha / (1.0 - alpha);
  double a = std::sin((1.0 - alpha) * th) * std::pow(std::sin(alpha * th), ratio) /
             std::pow(std::sin(th), 1.0 + ratio);
  return std::pow(a / e, 1.0 / ratio);
}

}
