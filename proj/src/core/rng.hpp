#pragma once

#include <cstdint>
#include <random>

namespace sphaera {

// Deterministic splittable random stream.
//
// A stream is identified by a 64-bit key.  derive() mixes (key, tag, index)
// through SplitMix64 into a child key, so every logical sample path or
// replication index gets its own stream regardless of scheduling.  Equal
// seeds give bit-identical sequences.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  RngStream derive(std::uint64_t tag, std::uint64_t index = 0) const;

  std::uint64_t next_u64();

  // Uniform on the open interval (0, 1).
  double uniform01();
  double uniform(double a, double b);

  // Standard normal, Box-Muller (fixed two-uniform consumption).
  double normal();

  double exponential();  // rate 1

  // Gamma(shape, scale 1), Marsaglia-Tsang with the U^(1/a) boost for a < 1.
  // shape == 0 returns 0.
  double gamma(double shape);

  // Positive alpha-stable with E exp(-mu S) = exp(-mu^alpha), alpha in (0,1].
  // Kanter's exponential-uniform representation; alpha == 1 gives S == 1.
  double positive_stable(double alpha);

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
};

}
