#pragma once

#include <string>

#include "core/rng.hpp"

namespace sphaera {

enum class SubordinatorKind { Stable, StableWithDrift, Gamma, GeometricStable, Sum };

// Laplace exponent Psi of a driftless-or-drifted subordinator,
// E exp(-mu D_t) = exp(-t Psi(mu)):
//   Stable           Psi = mu^alpha
//   StableWithDrift  Psi = b mu + mu^alpha
//   Gamma            Psi = ln(1 + mu)
//   GeometricStable  Psi = ln(1 + mu^alpha)
//   Sum              Psi = c mu^alpha + d ln(1 + mu^beta)
// alpha, beta in (0, 1]; the boundary value 1 degenerates the stable part to
// the unit drift (and GeometricStable(1) to Gamma).
struct LaplaceExponent {
  SubordinatorKind kind = SubordinatorKind::Gamma;
  double alpha = 0.0;
  double beta = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  static LaplaceExponent stable(double alpha);
  static LaplaceExponent stable_with_drift(double b, double alpha);
  static LaplaceExponent gamma();
  static LaplaceExponent geometric_stable(double alpha);
  static LaplaceExponent sum(double c, double alpha, double d, double beta);
};

double psi(const LaplaceExponent& e, double mu);

// dPsi/dmu; infinite at mu = 0 for kinds with an alpha < 1 stable part
// (domain error there).
double psi_prime(const LaplaceExponent& e, double mu);
bool psi_prime_singular_at_zero(const LaplaceExponent& e);

// Psi(mu) = b mu + Int_0^inf (1 - e^{-mu y}) M(y) dy recomputed from the
// listed Levy density by singularity-split quadrature.  Sum has no listed
// density (check its parts instead).  Converged results agree with psi()
// to ~1e-8; disagreement between quadrature refinements raises.
double psi_from_levy_measure(const LaplaceExponent& e, double mu);

// One increment D_t (marginal sampler; increments over disjoint intervals
// are independent, so paths compose from these).
double sample_subordinator(const LaplaceExponent& e, double t, RngStream& rng);

struct LaplaceCheck {
  double mu = 0.0;
  double analytic = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;
  double z_score = 0.0;
};

// Monte Carlo check of E exp(-mu D_t) against exp(-t Psi(mu)).
LaplaceCheck laplace_transform_check(const LaplaceExponent& e, double t, double mu, int n,
                                     RngStream rng);

// "stable:alpha=0.5" | "stable-drift:b=1,alpha=0.5" | "gamma" |
// "geostable:alpha=0.7" | "sum:c=1,alpha=0.5,d=2,beta=0.3"
LaplaceExponent parse_psi_spec(const std::string& spec);
std::string psi_spec_string(const LaplaceExponent& e);

}
