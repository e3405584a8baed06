#pragma once

#include <optional>

#include "ptwave/material.hpp"

namespace ptwave {

// Critical impact velocities separating the response regimes.
// v_double_star is absent when h < sqrt(3), where the two-wave
// dissipation-free branch has no room to exist.
struct threshold_set {
  double v_star;
  std::optional<double> v_double_star;
  double v_triple_star;
};

enum class loading_regime { weak, intermediate, strong };

struct loading_class {
  loading_regime regime;
  bool degenerate_shock;  // strong impact exactly at v_triple_star
};

// Taxonomy by the ratio h against the critical constants sqrt(3) and h*:
// a1: h > h*, a2: h = h* (within 1e-9 relative), a3: sqrt(3) < h < h*,
// b: h = sqrt(3) (within 1e-9 relative), c: h < sqrt(3).
enum class material_case { a1, a2, a3, b, c };

enum class kinetics { auto_select, dissipation_free, maximally_dissipative };

threshold_set compute_thresholds(const material& m);

// Unique root of F(h) - 2 h sqrt(h^2/3 - 1) on (sqrt(3), 2), where the two
// lower thresholds cross. Material independent; computed once and cached.
double h_star();

material_case classify_material(const material& m);

// Throws std::domain_error unless v > 0.
loading_class classify_loading(const material& m, double v);

// Resolves auto_select to dissipation_free for case a1 and to
// maximally_dissipative otherwise. Explicit dissipation_free requests are
// rejected (incompatible_kinetics_error) when h <= sqrt(3), where that
// branch is empty.
kinetics select_kinetics(const material& m, kinetics requested);

}  // namespace ptwave
