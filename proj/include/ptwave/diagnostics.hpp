#pragma once

#include <optional>

#include "ptwave/material.hpp"
#include "ptwave/riemann.hpp"

namespace ptwave {

enum class sonic_character { subsonic, sonic, supersonic };

// Admissibility of a phase boundary: nonnegative dissipation
// (gamma+ + gamma- >= alpha+beta), trailing restriction
// (2 gamma+ + gamma- <= 3(alpha+beta)/2, i.e. s_dot <= c(gamma+)), and a
// real nonnegative boundary speed (gamma- >= g(gamma+), the zero-speed
// locus). speed_real_vacuous marks front strains where g has no real value
// and the third constraint does not apply.
struct admissibility_report {
  bool dissipation_sign_ok;
  bool trailing_ok;
  bool speed_real_ok;
  bool speed_real_vacuous;
  double driving_force;
  double dissipation_rate;
  sonic_character sonic_front;
  sonic_character sonic_back;
};

struct jump_residual_set {
  double r1;             // s_dot (gamma+ - gamma-) + (v+ - v-)
  double r2;             // s_dot rho (v+ - v-) + (sigma+ - sigma-)
  double r1_normalized;  // r1 / (c0 max|gamma|)
  double r2_normalized;  // r2 / (rho c0^2 max|gamma|)
};

// Configurational force on the jump,
//   f = (E/12)(gamma+ - gamma-)^3 ((alpha+beta) - (gamma+ + gamma-)).
double driving_force(const material& m, const discontinuity& d);

// D = f s_dot; nonnegative for physically admissible motions.
double dissipation_rate(const material& m, const discontinuity& d);

// Zero-boundary-speed locus g(gamma+); nullopt where its radicand is
// negative and the constraint is vacuous.
std::optional<double> g_zero_speed(const material& m, double gamma_plus);

// xi1 is the trailing edge of the adjacent fan (c(gamma+) when no
// fan is present); the trailing check compares s_dot against it as well.
admissibility_report admissibility(const material& m, const discontinuity& d,
                                   double xi1);

// driving_force minus the closed-form maximally dissipative kinetic
// relation (9/4) E ((beta-alpha)/2)^4 (1 + (s_dot/c2)^2)^2; near zero for
// discontinuities built by the maximally dissipative branch.
double kinetic_relation_md_residual(const material& m, const discontinuity& d);

jump_residual_set jump_residuals(const material& m, const discontinuity& d);

}  // namespace ptwave
