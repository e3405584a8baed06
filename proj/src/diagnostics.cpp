#include "ptwave/diagnostics.hpp"

#include <cmath>

namespace ptwave {

namespace {

constexpr double k_sonic_tol = 1e-9;  // relative, on speeds
constexpr double k_flag_tol = 1e-9;   // relative slack on the inequality flags

sonic_character classify_speed(double s_dot, double c) {
  const double scale = std::fmax(std::fabs(s_dot), std::fabs(c));
  if (std::fabs(s_dot - c) <= k_sonic_tol * scale) return sonic_character::sonic;
  return s_dot < c ? sonic_character::subsonic : sonic_character::supersonic;
}

}  // namespace

double driving_force(const material& m, const discontinuity& d) {
  const double dg = d.gamma_front - d.gamma_back;
  return m.young_modulus / 12.0 * dg * dg * dg *
         ((m.alpha + m.beta) - (d.gamma_front + d.gamma_back));
}

double dissipation_rate(const material& m, const discontinuity& d) {
  return driving_force(m, d) * d.speed;
}

std::optional<double> g_zero_speed(const material& m, double gamma_plus) {
  const double s0 = 0.5 * (m.alpha + m.beta);
  const double rad = 3.0 * (0.5 * (3.0 * m.beta - m.alpha) - gamma_plus) *
                     (0.5 * (m.beta - 3.0 * m.alpha) + gamma_plus);
  if (rad < 0.0) return std::nullopt;
  return s0 + 0.5 * (s0 - gamma_plus + std::sqrt(rad));
}

admissibility_report admissibility(const material& m, const discontinuity& d,
                                   double xi1) {
  admissibility_report rep;
  rep.driving_force = driving_force(m, d);
  rep.dissipation_rate = rep.driving_force * d.speed;

  const double ab = m.alpha + m.beta;
  rep.dissipation_sign_ok = d.gamma_front + d.gamma_back >= ab * (1.0 - k_flag_tol);
  rep.trailing_ok =
      2.0 * d.gamma_front + d.gamma_back <= 1.5 * ab * (1.0 + k_flag_tol) &&
      d.speed <= xi1 * (1.0 + k_flag_tol) + 1e-12 * m.c0;

  const std::optional<double> g = g_zero_speed(m, d.gamma_front);
  if (g) {
    rep.speed_real_vacuous = false;
    rep.speed_real_ok = d.gamma_back >= *g * (1.0 - k_flag_tol);
  } else {
    rep.speed_real_vacuous = true;
    rep.speed_real_ok = true;
  }

  rep.sonic_front = classify_speed(d.speed, m.wave_speed(d.gamma_front));
  rep.sonic_back = classify_speed(d.speed, m.wave_speed(d.gamma_back));
  return rep;
}

double kinetic_relation_md_residual(const material& m, const discontinuity& d) {
  const double half_width = 0.5 * (m.beta - m.alpha);
  const double w2 = half_width * half_width;
  const double r = d.speed / m.c2;
  const double factor = 1.0 + r * r;
  return driving_force(m, d) - 2.25 * m.young_modulus * w2 * w2 * factor * factor;
}

jump_residual_set jump_residuals(const material& m, const discontinuity& d) {
  jump_residual_set res;
  res.r1 = d.speed * (d.gamma_front - d.gamma_back) + (d.v_front - d.v_back);
  res.r2 = d.speed * m.density * (d.v_front - d.v_back) +
           (m.stress(d.gamma_front) - m.stress(d.gamma_back));
  const double smax = std::fmax(std::fabs(d.gamma_front), std::fabs(d.gamma_back));
  if (smax > 0.0) {
    res.r1_normalized = res.r1 / (m.c0 * smax);
    res.r2_normalized = res.r2 / (m.density * m.c0 * m.c0 * smax);
  } else {
    res.r1_normalized = 0.0;
    res.r2_normalized = 0.0;
  }
  return res;
}

}  // namespace ptwave
