#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptwave/material.hpp"
#include "ptwave/regimes.hpp"

namespace ptwave {

// Centered rarefaction fan spanning xi in [xi_lo, xi_hi] with xi_hi = c0.
struct fan_region {
  double xi_lo;
  double xi_hi;
  double back_strain;   // strain at xi_lo (plate side)
  double front_strain;  // strain at xi_hi, always 0 here
};

enum class discontinuity_kind { shock, degenerate_shock, phase_boundary };

// Moving jump. Front (+) is the side the jump runs into, back (-) trails it.
struct discontinuity {
  double speed;        // s_dot >= 0
  double gamma_front;  // gamma+
  double gamma_back;   // gamma-
  double v_front;      // v+
  double v_back;       // v-
  discontinuity_kind kind;
};

struct bar_point {
  double strain;
  double velocity;
  double stress;
};

struct profile_sample {
  double x;
  double strain;
  double velocity;
  double stress;
};

// Self-similar solution of the impact problem in the first quadrant,
// depending on x and t only through xi = x/t. At most one jump and one fan;
// the five wave patterns are
//   weak:                plate | fan | undisturbed
//   strong:              plate | shock | undisturbed
//   maximally diss.:     plate | phase boundary flush against fan | undisturbed
//   dissipation-free:    plate | phase boundary | constant | fan | undisturbed
//   phase boundary only: plate | phase boundary | undisturbed
struct wave_solution {
  material mat;
  double impact_velocity;
  kinetics resolved_kinetics;
  loading_regime regime;
  bool degenerate_shock = false;
  // Set when an explicitly requested kinetics deviates from what auto_select
  // would have chosen for this material (intermediate regime only).
  bool kinetics_overridden = false;

  double plate_strain = 0.0;  // strain of the constant state against the plate
  std::optional<discontinuity> jump{};
  std::optional<fan_region> fan{};

  // State at xi = x/t >= 0. At a jump location returns the front (right)
  // state; throws std::domain_error for negative xi.
  bar_point evaluate(double xi) const;

  // Limit from below, so profile output can straddle discontinuities.
  bar_point evaluate_left_limit(double xi) const;

  // Distinct jump and fan-edge speeds in increasing order.
  std::vector<double> wave_edge_speeds() const;

  // Short human-readable pattern, e.g. "plate | phase boundary | fan | undisturbed".
  std::string pattern_summary() const;

  // n uniform samples of x over [0, x_max] at time t, plus a straddle pair
  // (left limit, then value) at every wave edge inside the window.
  std::vector<profile_sample> profile(double t, double x_max, int n) const;
};

// Dispatcher: resolves kinetics, classifies the loading, and calls the
// matching construction below. Throws what classify_loading and
// select_kinetics throw.
wave_solution solve(const material& m, double v_impact, kinetics requested);

// Pure rarefaction fan, 0 < V <= V*.
wave_solution solve_weak(const material& m, double v_impact);

// Single shock, V >= V***; degenerate (s_dot = c0) exactly at V***.
wave_solution solve_strong(const material& m, double v_impact);

// Fan plus sonic phase boundary (s_dot = c(gamma+)), V* < V < V***.
wave_solution solve_intermediate_md(const material& m, double v_impact);

// Fan plus subsonic phase boundary with zero driving force, V* < V <= V**.
wave_solution solve_intermediate_df(const material& m, double v_impact);

// Lone phase boundary (no fan), V** <= V <= V***, h >= sqrt(3).
wave_solution solve_phase_boundary_only(const material& m, double v_impact);

}  // namespace ptwave
