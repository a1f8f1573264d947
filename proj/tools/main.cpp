// Command-line front end.  Talks to the core exclusively through the C API
// so it doubles as a smoke test of the shared library surface.
//
// Exit codes: 0 success, 1 a statistical verification failed, 2 bad input.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphaera/sphaera.h"

namespace {

using json = nlohmann::ordered_json;

constexpr double kZMax = 4.0;  // MC acceptance band, in standard errors

std::string g_cmdline;

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "sphaera: error: " << msg << "\n";
  std::exit(2);
}

void check(sphaera_status st) {
  if (st != SPHAERA_OK) die(sphaera_last_error());
}

struct SpectrumDel {
  void operator()(sphaera_spectrum* p) const { sphaera_spectrum_free(p); }
};
struct PsiDel {
  void operator()(sphaera_psi* p) const { sphaera_psi_free(p); }
};
struct CoeffsDel {
  void operator()(sphaera_coeffs* p) const { sphaera_coeffs_free(p); }
};
struct MapDel {
  void operator()(sphaera_map* p) const { sphaera_map_free(p); }
};
using SpectrumPtr = std::unique_ptr<sphaera_spectrum, SpectrumDel>;
using PsiPtr = std::unique_ptr<sphaera_psi, PsiDel>;
using CoeffsPtr = std::unique_ptr<sphaera_coeffs, CoeffsDel>;
using MapPtr = std::unique_ptr<sphaera_map, MapDel>;

SpectrumPtr parse_spectrum(const std::string& spec, int bandlimit) {
  sphaera_spectrum* s = nullptr;
  check(sphaera_spectrum_parse(spec.c_str(), bandlimit, &s));
  return SpectrumPtr(s);
}

PsiPtr parse_psi(const std::string& spec) {
  sphaera_psi* p = nullptr;
  check(sphaera_psi_parse(spec.c_str(), &p));
  return PsiPtr(p);
}

// One header comment per artifact: version + exact invocation (the seed and
// every parameter appear verbatim in the echoed command line).
std::string echo(const std::string& extra = "") {
  std::string line = std::string("version=") + sphaera_version();
  if (!extra.empty()) line += " " + extra;
  line += " command: " + g_cmdline;
  return line;
}

std::string out_file(const std::string& dir, const char* name) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

double cos_between(double theta_x, double phi_x, double theta_y, double phi_y) {
  return std::cos(theta_x) * std::cos(theta_y) +
         std::sin(theta_x) * std::sin(theta_y) * std::cos(phi_x - phi_y);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  {
    std::ostringstream os;
    for (int i = 0; i < argc; ++i) {
      if (i) os << ' ';
      os << argv[i];
    }
    g_cmdline = os.str();
  }

  CLI::App app{
      "isotropic Gaussian random fields on the unit sphere, evolved and "
      "coordinate-changed by subordinate spherical Brownian motion"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("sphaera ") + sphaera_version());

  int threads = 0;
  app.add_option("--threads", threads,
                 "cap internal worker threads, 0 = hardware default (never affects results)");

  int rc = 0;

  // --- synth ------------------------------------------------------------
  struct {
    uint64_t seed = 1;
    std::string spectrum = "power:A=1,gamma=3";
    int L = 16;
    int grid_L = -1;
    std::string out = ".";
  } syn;
  auto* synth = app.add_subcommand(
      "synth", "sample a Gaussian field; write coefficients and a grid map");
  synth->fallthrough();
  synth->add_option("--seed", syn.seed, "RNG seed")->capture_default_str();
  synth->add_option("--spectrum", syn.spectrum,
                    "power:A=..,gamma=.. or damped:A=..,theta=..,nu=..,c=..")
      ->capture_default_str();
  synth->add_option("--L", syn.L, "bandlimit")->capture_default_str();
  synth->add_option("--grid-L", syn.grid_L, "synthesis grid bandlimit (default --L)");
  synth->add_option("--out", syn.out, "output directory")->capture_default_str();
  synth->callback([&] {
    sphaera_set_max_threads(threads);
    SpectrumPtr s = parse_spectrum(syn.spectrum, syn.L);
    sphaera_coeffs* c = nullptr;
    check(sphaera_sample_field(s.get(), syn.seed, &c));
    CoeffsPtr cp(c);
    sphaera_map* m = nullptr;
    check(sphaera_synthesize(c, syn.grid_L < 0 ? syn.L : syn.grid_L, &m));
    MapPtr mp(m);
    std::string comment = echo("seed=" + std::to_string(syn.seed));
    std::string coeffs_path = out_file(syn.out, "coeffs.csv");
    check(sphaera_coeffs_write(c, coeffs_path.c_str(), comment.c_str()));
    std::string map_path = out_file(syn.out, "map.csv");
    check(sphaera_map_write(m, map_path.c_str(), comment.c_str()));
    std::cout << "wrote " << coeffs_path << "\nwrote " << map_path << "\n";
  });

  // --- evolve -------------------------------------------------------------
  struct {
    std::string in;
    std::string spectrum;
    std::string psi;
    double t = 0.0;
    std::string out = ".";
  } evo;
  auto* evolve = app.add_subcommand(
      "evolve", "apply the subordinated-diffusion semigroup to stored coefficients");
  evolve->fallthrough();
  evolve->add_option("--in", evo.in, "input coefficients file")->required();
  evolve->add_option("--spectrum", evo.spectrum, "model spectrum of the input field")
      ->required();
  evolve->add_option("--psi", evo.psi, "Laplace exponent spec")->required();
  evolve->add_option("--t", evo.t, "evolution time (>= 0)")->required();
  evolve->add_option("--out", evo.out, "output directory")->capture_default_str();
  evolve->callback([&] {
    sphaera_set_max_threads(threads);
    sphaera_coeffs* cin = nullptr;
    check(sphaera_coeffs_read(evo.in.c_str(), &cin));
    CoeffsPtr cinp(cin);
    PsiPtr p = parse_psi(evo.psi);
    SpectrumPtr s = parse_spectrum(evo.spectrum, sphaera_coeffs_bandlimit(cin));
    sphaera_coeffs* cout_ = nullptr;
    check(sphaera_evolve(cin, p.get(), evo.t, &cout_));
    CoeffsPtr coutp(cout_);
    sphaera_spectrum* es = nullptr;
    check(sphaera_effective_spectrum(s.get(), p.get(), evo.t, &es));
    SpectrumPtr esp(es);
    std::string comment = echo();
    std::string cpath = out_file(evo.out, "evolved_coeffs.csv");
    check(sphaera_coeffs_write(cout_, cpath.c_str(), comment.c_str()));
    std::string spath = out_file(evo.out, "effective_spectrum.csv");
    check(sphaera_spectrum_write(es, spath.c_str(), comment.c_str()));
    std::cout << "wrote " << cpath << "\nwrote " << spath << "\n";
  });

  // --- spectrum -------------------------------------------------------------
  struct {
    std::string in;
    std::string out = ".";
  } spc;
  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "estimate the power spectrum of stored coefficients");
  spectrum_cmd->fallthrough();
  spectrum_cmd->add_option("--in", spc.in, "input coefficients file")->required();
  spectrum_cmd->add_option("--out", spc.out, "output directory")->capture_default_str();
  spectrum_cmd->callback([&] {
    sphaera_coeffs* c = nullptr;
    check(sphaera_coeffs_read(spc.in.c_str(), &c));
    CoeffsPtr cp(c);
    sphaera_spectrum* s = nullptr;
    check(sphaera_estimate_spectrum(c, &s));
    SpectrumPtr sp(s);
    std::string comment = echo();
    std::string path = out_file(spc.out, "spectrum_hat.csv");
    check(sphaera_spectrum_write(s, path.c_str(), comment.c_str()));
    std::cout << "wrote " << path << "\n";
  });

  // --- cov -------------------------------------------------------------
  struct {
    std::string spectrum = "power:A=1,gamma=3";
    int L = 8;
    std::string psi = "stable:alpha=0.5";
    double t1 = 0.0;
    double t2 = 0.0;
    double cos_angle = 1.0;
    bool along_path = false;
  } cov;
  auto* cov_cmd = app.add_subcommand(
      "cov", "evaluate the analytic covariance of the coordinate-changed field");
  cov_cmd->fallthrough();
  cov_cmd->add_option("--spectrum", cov.spectrum, "spectrum spec")->capture_default_str();
  cov_cmd->add_option("--L", cov.L, "spectrum bandlimit")->capture_default_str();
  cov_cmd->add_option("--psi", cov.psi, "Laplace exponent spec")->capture_default_str();
  cov_cmd->add_option("--t1", cov.t1, "first time")->capture_default_str();
  cov_cmd->add_option("--t2", cov.t2, "second time")->capture_default_str();
  cov_cmd->add_option("--cos", cov.cos_angle, "cosine of the angle between the two points")
      ->capture_default_str();
  cov_cmd->add_flag("--along-path", cov.along_path,
                    "covariance along one walk (same point, lag t2 - t1) instead of two "
                    "independent walks");
  cov_cmd->callback([&] {
    SpectrumPtr s = parse_spectrum(cov.spectrum, cov.L);
    PsiPtr p = parse_psi(cov.psi);
    double value = 0, tail = 0;
    if (cov.along_path) {
      check(sphaera_cov_time(s.get(), p.get(), cov.t1, cov.t2, &value, &tail));
    } else {
      check(sphaera_cov_space_time(s.get(), p.get(), cov.t1, cov.t2, cov.cos_angle, &value,
                                   &tail));
    }
    emit(json{{"t1", cov.t1},
              {"t2", cov.t2},
              {"cos_angle", cov.along_path ? 1.0 : cov.cos_angle},
              {"along_path", cov.along_path},
              {"gamma", value},
              {"tail_bound", tail}});
  });

  // --- cov-check -------------------------------------------------------------
  struct {
    std::string spectrum = "power:A=1,gamma=3";
    int L = 8;
    std::string psi = "stable:alpha=0.5";
    double t1 = 0.5;
    double t2 = 0.5;
    double theta_x = 0.7, phi_x = 0.4;
    double theta_y = 1.2, phi_y = 2.0;
    bool same_point = false;
    int N = 20000;
    uint64_t seed = 1;
  } cck;
  auto* cov_check = app.add_subcommand(
      "cov-check", "Monte Carlo covariance of the coordinate-changed field vs the oracle");
  cov_check->fallthrough();
  cov_check->add_option("--spectrum", cck.spectrum, "spectrum spec")->capture_default_str();
  cov_check->add_option("--L", cck.L, "spectrum bandlimit")->capture_default_str();
  cov_check->add_option("--psi", cck.psi, "Laplace exponent spec")->capture_default_str();
  cov_check->add_option("--t1", cck.t1, "first observation time")->capture_default_str();
  cov_check->add_option("--t2", cck.t2, "second observation time")->capture_default_str();
  cov_check->add_option("--theta-x", cck.theta_x, "first point colatitude")
      ->capture_default_str();
  cov_check->add_option("--phi-x", cck.phi_x, "first point longitude")->capture_default_str();
  cov_check->add_option("--theta-y", cck.theta_y, "second point colatitude")
      ->capture_default_str();
  cov_check->add_option("--phi-y", cck.phi_y, "second point longitude")->capture_default_str();
  cov_check->add_flag("--same-point", cck.same_point,
                      "observe one walk from (theta-x, phi-x) at t1 and t2 (requires t1 <= t2)");
  cov_check->add_option("--N", cck.N, "Monte Carlo replications")->capture_default_str();
  cov_check->add_option("--seed", cck.seed, "RNG seed")->capture_default_str();
  cov_check->callback([&] {
    sphaera_set_max_threads(threads);
    SpectrumPtr s = parse_spectrum(cck.spectrum, cck.L);
    PsiPtr p = parse_psi(cck.psi);
    sphaera_mc_result r{};
    double oracle = 0, tail = 0;
    if (cck.same_point) {
      check(sphaera_mc_cov_time(s.get(), p.get(), cck.theta_x, cck.phi_x, cck.t1, cck.t2,
                                cck.N, cck.seed, &r));
      check(sphaera_cov_time(s.get(), p.get(), cck.t1, cck.t2, &oracle, &tail));
    } else {
      check(sphaera_mc_cov_space(s.get(), p.get(), cck.theta_x, cck.phi_x, cck.theta_y,
                                 cck.phi_y, cck.t1, cck.t2, cck.N, cck.seed, &r));
      double ca = cos_between(cck.theta_x, cck.phi_x, cck.theta_y, cck.phi_y);
      check(sphaera_cov_space_time(s.get(), p.get(), cck.t1, cck.t2, ca, &oracle, &tail));
    }
    double z = r.std_error > 0 ? (r.estimate - oracle) / r.std_error : 0.0;
    bool pass = std::abs(z) <= kZMax;
    emit(json{{"seed", cck.seed},
              {"oracle", oracle},
              {"estimate", r.estimate},
              {"se", r.std_error},
              {"z_score", z},
              {"pass", pass}});
    if (!pass) rc = 1;
  });

  // --- walk -------------------------------------------------------------
  struct {
    std::string psi = "gamma";
    double t = 1.0;
    int steps = 100;
    std::vector<double> times;
    double theta = 0.0;
    double phi = 0.0;
    uint64_t seed = 1;
    std::string out = ".";
  } wlk;
  auto* walk = app.add_subcommand(
      "walk", "sample one subordinate spherical Brownian path and write t,theta,phi rows");
  walk->fallthrough();
  walk->add_option("--psi", wlk.psi, "Laplace exponent spec")->capture_default_str();
  walk->add_option("--t", wlk.t, "final time of the uniform grid")->capture_default_str();
  walk->add_option("--steps", wlk.steps, "number of uniform grid points")
      ->capture_default_str();
  walk->add_option("--times", wlk.times,
                   "explicit strictly increasing positive times (overrides --t/--steps)")
      ->delimiter(',');
  walk->add_option("--theta", wlk.theta, "start colatitude")->capture_default_str();
  walk->add_option("--phi", wlk.phi, "start longitude")->capture_default_str();
  walk->add_option("--seed", wlk.seed, "RNG seed")->capture_default_str();
  walk->add_option("--out", wlk.out, "output directory")->capture_default_str();
  walk->callback([&] {
    sphaera_set_max_threads(threads);
    PsiPtr p = parse_psi(wlk.psi);
    std::vector<double> times = wlk.times;
    if (times.empty()) {
      if (wlk.steps < 1) die("--steps must be positive");
      for (int i = 1; i <= wlk.steps; ++i) times.push_back(wlk.t * i / wlk.steps);
    }
    std::string comment = echo("seed=" + std::to_string(wlk.seed));
    std::string path = out_file(wlk.out, "walk.csv");
    check(sphaera_walk_to_csv(p.get(), wlk.theta, wlk.phi, times.data(), times.size(),
                              wlk.seed, path.c_str(), comment.c_str()));
    std::cout << "wrote " << path << "\n";
  });

  // --- kernel -------------------------------------------------------------
  struct {
    std::string psi = "gamma";
    int L_trunc = 256;
    int l_min = -1;
    std::string out = ".";
  } ker;
  auto* kernel = app.add_subcommand(
      "kernel", "tabulate the zonal jump kernel of the subordinate generator over angles");
  kernel->fallthrough();
  kernel->add_option("--psi", ker.psi, "Laplace exponent spec")->capture_default_str();
  kernel->add_option("--L-trunc", ker.L_trunc, "series truncation degree")
      ->capture_default_str();
  kernel->add_option("--l-min", ker.l_min,
                     "lowest degree (default: 0, or 1 when the derivative is singular at 0)");
  kernel->add_option("--out", ker.out, "output directory")->capture_default_str();
  kernel->callback([&] {
    sphaera_set_max_threads(threads);
    PsiPtr p = parse_psi(ker.psi);
    int l_min = ker.l_min;
    if (l_min < 0) {
      double d = 0;
      l_min = sphaera_psi_prime(p.get(), 0.0, &d) == SPHAERA_OK ? 0 : 1;
    }
    std::string path = out_file(ker.out, "kernel.csv");
    std::ofstream os(path);
    if (!os) die("cannot open " + path);
    os << "# sphaera-kernel L_trunc=" << ker.L_trunc << " l_min=" << l_min << "\n";
    os << "# " << echo() << "\n";
    os << "# columns: theta_deg,kernel,last_term,tail_bound,certified\n";
    char buf[160];
    for (int deg = 1; deg <= 180; ++deg) {
      double theta = deg * M_PI / 180.0;
      double value = 0, last = 0, tail = 0;
      int cert = 0;
      check(sphaera_jump_kernel(p.get(), std::cos(theta), ker.L_trunc, l_min, &value, &last,
                                &tail, &cert));
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%d\n", deg, value, last, tail,
                    cert);
      os << buf;
    }
    os.close();
    if (!os) die("failed writing " + path);
    std::cout << "wrote " << path << "\n";
  });

  // --- subord-test -------------------------------------------------------------
  struct {
    std::string psi = "stable:alpha=0.5";
    double t = 1.0;
    double mu = 1.0;
    int N = 100000;
    uint64_t seed = 1;
  } sub;
  auto* subord = app.add_subcommand(
      "subord-test", "Monte Carlo Laplace-transform check of the subordinator sampler");
  subord->fallthrough();
  subord->add_option("--psi", sub.psi, "Laplace exponent spec")->capture_default_str();
  subord->add_option("--t", sub.t, "subordinator time")->capture_default_str();
  subord->add_option("--mu", sub.mu, "Laplace argument")->capture_default_str();
  subord->add_option("--N", sub.N, "Monte Carlo replications")->capture_default_str();
  subord->add_option("--seed", sub.seed, "RNG seed")->capture_default_str();
  subord->callback([&] {
    sphaera_set_max_threads(threads);
    PsiPtr p = parse_psi(sub.psi);
    double analytic = 0, estimate = 0, se = 0, z = 0;
    check(sphaera_laplace_check(p.get(), sub.t, sub.mu, sub.N, sub.seed, &analytic, &estimate,
                                &se, &z));
    bool pass = std::abs(z) <= kZMax;
    emit(json{{"seed", sub.seed},
              {"analytic", analytic},
              {"estimate", estimate},
              {"se", se},
              {"z_score", z},
              {"pass", pass}});
    if (!pass) rc = 1;
  });

  // --- verify-all -------------------------------------------------------------
  struct {
    uint64_t seed = 1;
    std::string out = ".";
  } ver;
  auto* verify = app.add_subcommand(
      "verify-all", "run the full statistical acceptance suite and write the JSON report");
  verify->fallthrough();
  verify->add_option("--seed", ver.seed, "RNG seed for the whole suite")
      ->capture_default_str();
  verify->add_option("--out", ver.out, "report directory")->capture_default_str();
  verify->callback([&] {
    sphaera_set_max_threads(threads);
    char* js = nullptr;
    int all_pass = 0;
    check(sphaera_verify_run(ver.seed, &js, &all_pass));
    std::string report(js);
    sphaera_string_free(js);
    std::string path = out_file(ver.out, "verify_report.json");
    {
      std::ofstream os(path);
      if (!os) die("cannot open " + path);
      os << report;
      os.close();
      if (!os) die("failed writing " + path);
    }
    json parsed = json::parse(report);
    for (const auto& c : parsed.at("criteria")) {
      std::cout << (c.at("pass").get<bool>() ? "PASS " : "FAIL ") << std::left << std::setw(26)
                << c.at("name").get<std::string>() << " " << c.at("details").get<std::string>()
                << "\n";
    }
    std::cout << (all_pass ? "verification passed" : "verification FAILED") << " (seed "
              << ver.seed << "), report: " << path << "\n";
    if (!all_pass) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
