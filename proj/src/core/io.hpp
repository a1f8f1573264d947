#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "core/fields.hpp"
#include "core/grid.hpp"
#include "core/spectrum.hpp"
#include "core/sphere_walk.hpp"

namespace sphaera {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// CSV artifacts.  Every file starts with a format header line
//   # sphaera-<kind> key=value ...
// followed by any caller-provided comment lines (each written as `# ...`,
// typically the version/command/seed echo), then the rows at 17 significant
// digits.  Readers skip all comment lines after the first.

// `theta,phi,value` rows, row-major theta-then-phi on the L-grid.
void write_map(const std::string& path, const FieldMap& map,
               const std::vector<std::string>& comments = {});
FieldMap read_map(const std::string& path);

// `l,m,re,im` rows sorted by (l, m), stored orders m >= 0.
void write_coefficients(const std::string& path, const HarmonicCoefficients& c,
                        const std::vector<std::string>& comments = {});
HarmonicCoefficients read_coefficients(const std::string& path);

// `l,C_l` rows; the family echo is the parseable spec string, so parametric
// tails survive a round trip.
void write_spectrum(const std::string& path, const PowerSpectrum& s,
                    const std::vector<std::string>& comments = {});
PowerSpectrum read_spectrum(const std::string& path);

// `t,theta,phi` rows.
void write_walk(const std::string& path, const WalkPath& w,
                const std::vector<std::string>& comments = {});
WalkPath read_walk(const std::string& path);

}
