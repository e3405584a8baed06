#include "ptwave/regimes.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ptwave/errors.hpp"
#include "ptwave/numerics.hpp"

namespace ptwave {

namespace {

constexpr double k_case_tol = 1e-9;        // relative, material taxonomy
constexpr double k_degenerate_tol = 1e-12;  // relative, V = V*** band

double sqrt3() { return std::sqrt(3.0); }

}  // namespace

threshold_set compute_thresholds(const material& m) {
  threshold_set t;
  t.v_star = m.c1 * numerics::f_antiderivative(m.h);
  if (m.h >= sqrt3()) {
    const double rad = m.h * m.h / 3.0 - 1.0;
    t.v_double_star = 2.0 * m.c1 * m.h * std::sqrt(rad < 0.0 ? 0.0 : rad);
  }
  t.v_triple_star = 3.0 * m.c1 * m.h * std::sqrt(m.h * m.h - 1.0);
  return t;
}

double h_star() {
  // The crossing is O(1) steep, so the default tolerances would leave the
  // residual near 1e-12; tighten to a few ulp.
  static const double value = [] {
    auto crossing = [](double x) {
      // x*x/3 - 1 can land a few ulp below zero at the sqrt(3) endpoint.
      const double rad = std::fmax(x * x / 3.0 - 1.0, 0.0);
      return numerics::f_antiderivative(x) - 2.0 * x * std::sqrt(rad);
    };
    numerics::root_config cfg;
    cfg.rel_tol = 4e-16;
    cfg.abs_tol = 1e-16;
    return numerics::find_root(crossing, sqrt3(), 2.0, cfg);
  }();
  return value;
}

material_case classify_material(const material& m) {
  const double hs = h_star();
  const double r3 = sqrt3();
  if (std::fabs(m.h - hs) <= k_case_tol * hs) return material_case::a2;
  if (std::fabs(m.h - r3) <= k_case_tol * r3) return material_case::b;
  if (m.h > hs) return material_case::a1;
  if (m.h > r3) return material_case::a3;
  return material_case::c;
}

loading_class classify_loading(const material& m, double v) {
  if (!(v > 0.0)) {
    std::ostringstream msg;
    msg << "impact velocity must be positive, got " << v;
    throw std::domain_error(msg.str());
  }
  const threshold_set t = compute_thresholds(m);
  if (v <= t.v_star) return {loading_regime::weak, false};
  if (std::fabs(v - t.v_triple_star) <= k_degenerate_tol * t.v_triple_star) {
    return {loading_regime::strong, true};
  }
  if (v >= t.v_triple_star) return {loading_regime::strong, false};
  return {loading_regime::intermediate, false};
}

kinetics select_kinetics(const material& m, kinetics requested) {
  const material_case mc = classify_material(m);
  switch (requested) {
    case kinetics::maximally_dissipative:
      return kinetics::maximally_dissipative;
    case kinetics::dissipation_free:
      if (mc == material_case::b || mc == material_case::c) {
        std::ostringstream msg;
        msg << "dissipation-free kinetics unavailable for h = " << m.h
            << " <= sqrt(3): the zero-driving-force branch is empty";
        throw incompatible_kinetics_error(msg.str());
      }
      return kinetics::dissipation_free;
    case kinetics::auto_select:
    default:
      return mc == material_case::a1 ? kinetics::dissipation_free
                                     : kinetics::maximally_dissipative;
  }
}

}  // namespace ptwave
