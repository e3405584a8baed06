#pragma once

namespace ptwave {

// State carried by the bar at one point: strain and particle velocity.
// Strains below -1 would fold the deformation over itself.
struct bar_state {
  double strain = 0.0;
  double velocity = 0.0;
};

// Cubic-law material for a phase-transforming bar. The stress response
//   sigma(g) = E (g^3/3 - (alpha+beta) g^2/2 + alpha beta g)
// rises on [0, alpha], falls on the spinodal (alpha, beta), and rises
// again on [beta, inf). Derived wave-speed constants are computed once
// at construction:
//   c0 = c(0), c1 = (beta-alpha)^2/(4 sqrt(alpha beta)) c0,
//   c2 = 2 c1/(beta-alpha), h = (beta+alpha)/(beta-alpha).
struct material {
  double young_modulus;
  double density;
  double alpha;
  double beta;

  double c0;
  double c1;
  double c2;
  double h;

  // Throws std::invalid_argument unless E > 0, rho > 0 and 0 < alpha < beta.
  material(double young_modulus, double density, double alpha, double beta);

  // Unit-modulus, unit-density preset used throughout tests and examples.
  static material dimensionless(double alpha, double beta);

  // Nominal stress. Defined for all strains g > -1, spinodal included,
  // because chord and shock equations evaluate it between the branches.
  double stress(double gamma) const;

  // Sound speed c(g) = c0 sqrt((g-alpha)(g-beta)/(alpha beta)), valid on
  // the two phase branches [0, alpha] and [beta, inf) only. Throws
  // spinodal_domain_error inside (alpha, beta), std::domain_error for g < 0.
  double wave_speed(double gamma) const;

  // Dimensionless coordinate eta = (alpha+beta-2g)/(beta-alpha) used by the
  // parametric solution curves; eta(alpha) = 1, eta(0) = h.
  double eta_of_gamma(double gamma) const;
  double gamma_of_eta(double eta) const;

  // Integral of the sound speed over [gamma_lo, gamma_hi], both limits on
  // the alpha-branch; closed form c1 (F(eta_lo) - F(eta_hi)). Throws
  // std::domain_error if the limits leave [0, alpha] or are reversed.
  double integral_c(double gamma_lo, double gamma_hi) const;
};

}  // namespace ptwave
