#include "core/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace sphaera {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

void write_comments(std::ofstream& out, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << "\n";
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

// --- reading ---------------------------------------------------------------

struct Header {
  std::string kind;
  std::map<std::string, std::string> kv;

  std::string get(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) throw IoError("header missing field '" + key + "'");
    return it->second;
  }
  int get_int(const std::string& key) const {
    try {
      return std::stoi(get(key));
    } catch (const std::exception&) {
      throw IoError("header field '" + key + "' is not an integer");
    }
  }
};

Header read_header(std::istream& in, const std::string& path, const std::string& want) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty file: " + path);
  std::istringstream ss(line);
  std::string hash, kind;
  ss >> hash >> kind;
  if (hash != "#" || kind != "sphaera-" + want)
    throw IoError("not a sphaera-" + want + " file: " + path);
  Header h;
  h.kind = kind;
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw IoError("malformed header token '" + tok + "' in " + path);
    h.kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return h;
}

// Next data line, skipping '#' comments and blanks; false at EOF.
bool next_row(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    return true;
  }
  return false;
}

std::vector<double> parse_row(const std::string& line, std::size_t ncols, const std::string& path) {
  std::vector<double> out;
  const char* p = line.c_str();
  while (true) {
    char* end = nullptr;
    double v = std::strtod(p, &end);
    if (end == p) throw IoError("malformed row '" + line + "' in " + path);
    out.push_back(v);
    p = end;
    while (*p == ' ' || *p == '\t') ++p;
    if (*p == ',') {
      ++p;
      continue;
    }
    if (*p == '\0') break;
    throw IoError("malformed row '" + line + "' in " + path);
  }
  if (out.size() != ncols)
    throw IoError("expected " + std::to_string(ncols) + " columns in " + path + ": '" + line + "'");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  return in;
}

}  // namespace

void write_map(const std::string& path, const FieldMap& map,
               const std::vector<std::string>& comments) {
  auto out = open_out(path);
  out << "# sphaera-map L=" << map.grid.bandlimit << " ntheta=" << map.grid.ntheta()
      << " nphi=" << map.grid.nphi << "\n";
  write_comments(out, comments);
  for (int i = 0; i < map.grid.ntheta(); ++i)
    for (int j = 0; j < map.grid.nphi; ++j)
      out << fmt(map.grid.theta[i]) << ',' << fmt(map.grid.phi(j)) << ',' << fmt(map.at(i, j))
          << "\n";
  finish(out, path);
}

FieldMap read_map(const std::string& path) {
  auto in = open_in(path);
  Header h = read_header(in, path, "map");
  int L = h.get_int("L");
  FieldMap map = make_map(make_grid(L));
  if (map.grid.ntheta() != h.get_int("ntheta") || map.grid.nphi != h.get_int("nphi"))
    throw IoError("grid shape in header does not match the L=" + std::to_string(L) + " grid: " + path);
  std::string line;
  for (std::size_t k = 0; k < map.values.size(); ++k) {
    if (!next_row(in, line)) throw IoError("truncated map file: " + path);
    auto row = parse_row(line, 3, path);
    map.values[k] = row[2];
  }
  if (next_row(in, line)) throw IoError("trailing rows in map file: " + path);
  return map;
}

void write_coefficients(const std::string& path, const HarmonicCoefficients& c,
                        const std::vector<std::string>& comments) {
  auto out = open_out(path);
  out << "# sphaera-coeffs L=" << c.bandlimit() << "\n";
  write_comments(out, comments);
  for (int l = 0; l <= c.bandlimit(); ++l)
    for (int m = 0; m <= l; ++m)
      out << l << ',' << m << ',' << fmt(c.at(l, m).real()) << ',' << fmt(c.at(l, m).imag())
          << "\n";
  finish(out, path);
}

HarmonicCoefficients read_coefficients(const std::string& path) {
  auto in = open_in(path);
  Header h = read_header(in, path, "coeffs");
  int L = h.get_int("L");
  if (L < 0) throw IoError("negative bandlimit in " + path);
  HarmonicCoefficients c(L);
  std::string line;
  for (int l = 0; l <= L; ++l)
    for (int m = 0; m <= l; ++m) {
      if (!next_row(in, line)) throw IoError("truncated coefficients file: " + path);
      auto row = parse_row(line, 4, path);
      if (row[0] != l || row[1] != m)
        throw IoError("coefficients out of (l, m) order in " + path + ": '" + line + "'");
      c.at(l, m) = {row[2], row[3]};
    }
  if (next_row(in, line)) throw IoError("trailing rows in coefficients file: " + path);
  return c;
}

void write_spectrum(const std::string& path, const PowerSpectrum& s,
                    const std::vector<std::string>& comments) {
  auto out = open_out(path);
  out << "# sphaera-spectrum L=" << s.bandlimit << " family=" << spectrum_spec_string(s) << "\n";
  write_comments(out, comments);
  for (int l = 0; l <= s.bandlimit; ++l) out << l << ',' << fmt(s.at(l)) << "\n";
  finish(out, path);
}

PowerSpectrum read_spectrum(const std::string& path) {
  auto in = open_in(path);
  Header h = read_header(in, path, "spectrum");
  int L = h.get_int("L");
  if (L < 0) throw IoError("negative bandlimit in " + path);
  std::string family = h.get("family");
  PowerSpectrum s;
  if (family == "tabulated") {
    s.bandlimit = L;
    s.family = SpectrumFamily::Tabulated;
    s.cl.assign(L + 1, 0.0);
  } else {
    try {
      s = parse_spectrum_spec(family, L);
    } catch (const std::invalid_argument& e) {
      throw IoError(std::string("bad family in spectrum header: ") + e.what());
    }
  }
  std::string line;
  for (int l = 0; l <= L; ++l) {
    if (!next_row(in, line)) throw IoError("truncated spectrum file: " + path);
    auto row = parse_row(line, 2, path);
    if (row[0] != l) throw IoError("spectrum rows out of order in " + path);
    if (row[1] < 0.0) throw IoError("negative C_l in " + path);
    s.cl[l] = row[1];
  }
  if (next_row(in, line)) throw IoError("trailing rows in spectrum file: " + path);
  return s;
}

void write_walk(const std::string& path, const WalkPath& w,
                const std::vector<std::string>& comments) {
  auto out = open_out(path);
  out << "# sphaera-walk n=" << w.times.size() << " start_theta=" << fmt(w.start.theta)
      << " start_phi=" << fmt(w.start.phi) << "\n";
  write_comments(out, comments);
  for (std::size_t k = 0; k < w.times.size(); ++k)
    out << fmt(w.times[k]) << ',' << fmt(w.positions[k].theta) << ',' << fmt(w.positions[k].phi)
        << "\n";
  finish(out, path);
}

WalkPath read_walk(const std::string& path) {
  auto in = open_in(path);
  Header h = read_header(in, path, "walk");
  int n = h.get_int("n");
  if (n < 0) throw IoError("negative path length in " + path);
  WalkPath w;
  try {
    w.start = make_point(std::stod(h.get("start_theta")), std::stod(h.get("start_phi")));
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("bad walk start in ") + path + ": " + e.what());
  }
  std::string line;
  for (int k = 0; k < n; ++k) {
    if (!next_row(in, line)) throw IoError("truncated walk file: " + path);
    auto row = parse_row(line, 3, path);
    w.times.push_back(row[0]);
    w.positions.push_back(make_point(row[1], row[2]));
  }
  if (next_row(in, line)) throw IoError("trailing rows in walk file: " + path);
  return w;
}

}
