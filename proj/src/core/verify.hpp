#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sphaera {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string details;  // worst-case metrics; no timing, so reports are reproducible
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> results;

  bool all_pass() const;
};

// The full statistical acceptance battery: harmonic identities, transform
// round trip, subordinator Laplace-transform checks, sphere-walk transition
// moments, space-time and time covariance reproduction, PDE residuals,
// evolved-vs-moved variance separation, spectrum estimator calibration,
// dependence sums, and an internal determinism probe.  Deterministic
// function of the seed (and independent of the thread cap).
VerifyReport run_verification(std::uint64_t seed);

// Stable JSON rendering of the report (fixed key order).
std::string report_json(const VerifyReport& r);

}
