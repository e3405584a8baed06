#include "ptwave/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ptwave/errors.hpp"
#include "ptwave/numerics.hpp"

namespace ptwave {

namespace {

double F(double z) { return numerics::f_antiderivative(z); }

double clamp01(double v, double lo, double hi) { return std::fmin(hi, std::fmax(lo, v)); }

double sqrt_nonneg(double v) { return std::sqrt(v < 0.0 ? 0.0 : v); }

void require_positive_velocity(double v) {
  if (!(v > 0.0)) {
    std::ostringstream msg;
    msg << "impact velocity must be positive, got " << v;
    throw std::domain_error(msg.str());
  }
}

// Root of a monotone equation whose endpoint values can land a few ulp on
// the wrong side of zero when V sits exactly on a regime threshold; snap to
// the endpoint in that case instead of failing the bracket.
double snapped_root(const std::function<double(double)>& g, double lo, double hi,
                    double scale) {
  const double glo = g(lo);
  if (glo == 0.0) return lo;
  const double ghi = g(hi);
  if (ghi == 0.0) return hi;
  if ((glo > 0.0) == (ghi > 0.0)) {
    const double snap = 64.0 * std::numeric_limits<double>::epsilon() * std::fabs(scale);
    if (std::fabs(glo) <= snap && std::fabs(glo) <= std::fabs(ghi)) return lo;
    if (std::fabs(ghi) <= snap) return hi;
  }
  return numerics::find_root(g, lo, hi);
}

// Fan interior: eta(xi) = sqrt(1 + (xi/c2)^2) inverts c on the alpha-branch.
double fan_eta(const material& m, double xi) {
  const double r = xi / m.c2;
  return std::sqrt(1.0 + r * r);
}

bar_point fan_point(const material& m, double xi) {
  const double eta = fan_eta(m, xi);
  double gamma = m.gamma_of_eta(eta);
  if (gamma < 0.0) gamma = 0.0;  // roundoff at the leading edge
  const double v = -m.c1 * (F(m.h) - F(eta));
  return {gamma, v, m.stress(gamma)};
}

}  // namespace

bar_point wave_solution::evaluate(double xi) const {
  if (!(xi >= 0.0)) {
    std::ostringstream msg;
    msg << "evaluate requires xi >= 0, got " << xi;
    throw std::domain_error(msg.str());
  }
  if (jump && xi < jump->speed) {
    return {plate_strain, -impact_velocity, mat.stress(plate_strain)};
  }
  if (fan) {
    if (xi < fan->xi_lo) {
      if (jump) return {jump->gamma_front, jump->v_front, mat.stress(jump->gamma_front)};
      return {plate_strain, -impact_velocity, mat.stress(plate_strain)};
    }
    if (xi < fan->xi_hi) return fan_point(mat, xi);
    return {0.0, 0.0, 0.0};
  }
  if (jump) return {jump->gamma_front, jump->v_front, mat.stress(jump->gamma_front)};
  return {0.0, 0.0, 0.0};
}

bar_point wave_solution::evaluate_left_limit(double xi) const {
  if (!(xi >= 0.0)) {
    std::ostringstream msg;
    msg << "evaluate requires xi >= 0, got " << xi;
    throw std::domain_error(msg.str());
  }
  if (jump && xi <= jump->speed) {
    return {plate_strain, -impact_velocity, mat.stress(plate_strain)};
  }
  if (fan) {
    if (xi <= fan->xi_lo) {
      if (jump) return {jump->gamma_front, jump->v_front, mat.stress(jump->gamma_front)};
      return {plate_strain, -impact_velocity, mat.stress(plate_strain)};
    }
    if (xi <= fan->xi_hi) return fan_point(mat, xi);
    return {0.0, 0.0, 0.0};
  }
  if (jump) return {jump->gamma_front, jump->v_front, mat.stress(jump->gamma_front)};
  return {0.0, 0.0, 0.0};
}

std::vector<double> wave_solution::wave_edge_speeds() const {
  std::vector<double> speeds;
  if (jump) speeds.push_back(jump->speed);
  if (fan) {
    speeds.push_back(fan->xi_lo);
    speeds.push_back(fan->xi_hi);
  }
  std::sort(speeds.begin(), speeds.end());
  speeds.erase(std::unique(speeds.begin(), speeds.end()), speeds.end());
  return speeds;
}

std::string wave_solution::pattern_summary() const {
  if (jump && fan) {
    if (jump->speed < fan->xi_lo) {
      return "plate | phase boundary | constant | fan | undisturbed";
    }
    return "plate | phase boundary | fan | undisturbed";
  }
  if (jump) {
    switch (jump->kind) {
      case discontinuity_kind::shock:
        return "plate | shock | undisturbed";
      case discontinuity_kind::degenerate_shock:
        return "plate | degenerate shock | undisturbed";
      case discontinuity_kind::phase_boundary:
        return "plate | phase boundary | undisturbed";
    }
  }
  return "plate | fan | undisturbed";
}

std::vector<profile_sample> wave_solution::profile(double t, double x_max, int n) const {
  if (!(t > 0.0)) throw std::invalid_argument("profile requires t > 0");
  if (!(x_max > 0.0)) throw std::invalid_argument("profile requires x_max > 0");
  if (n < 2) throw std::invalid_argument("profile requires at least 2 samples");

  struct row {
    double x;
    int order;  // straddle pairs sort before the uniform grid at equal x
    bar_point p;
  };
  std::vector<row> rows;
  rows.reserve(static_cast<size_t>(n) + 8);
  for (int j = 0; j < n; ++j) {
    const double x = x_max * static_cast<double>(j) / static_cast<double>(n - 1);
    rows.push_back({x, 2, evaluate(x / t)});
  }
  for (double s : wave_edge_speeds()) {
    const double x = s * t;
    if (x > x_max) continue;
    rows.push_back({x, 0, evaluate_left_limit(s)});
    rows.push_back({x, 1, evaluate(s)});
  }
  std::sort(rows.begin(), rows.end(), [](const row& a, const row& b) {
    return a.x != b.x ? a.x < b.x : a.order < b.order;
  });
  std::vector<profile_sample> out;
  out.reserve(rows.size());
  for (const row& r : rows) out.push_back({r.x, r.p.strain, r.p.velocity, r.p.stress});
  return out;
}

wave_solution solve_weak(const material& m, double v_impact) {
  require_positive_velocity(v_impact);
  const threshold_set th = compute_thresholds(m);
  if (v_impact > th.v_star) {
    std::ostringstream msg;
    msg << "weak construction requires V <= V* = " << th.v_star << ", got V = " << v_impact;
    throw out_of_regime_error(msg.str());
  }
  const double fh = F(m.h);
  auto eq = [&](double eta) { return m.c1 * (fh - F(eta)) - v_impact; };  // decreasing
  const double eta1 = snapped_root(eq, 1.0, m.h, std::fmax(v_impact, th.v_star));
  const double gamma1 = clamp01(m.gamma_of_eta(eta1), 0.0, m.alpha);
  const double xi1 = std::fmin(m.c2 * sqrt_nonneg(eta1 * eta1 - 1.0), m.c0);

  wave_solution sol{m, v_impact, kinetics::auto_select, loading_regime::weak};
  sol.plate_strain = gamma1;
  sol.fan = fan_region{xi1, m.c0, gamma1, 0.0};
  return sol;
}

wave_solution solve_strong(const material& m, double v_impact) {
  require_positive_velocity(v_impact);
  const threshold_set th = compute_thresholds(m);
  const bool degenerate =
      std::fabs(v_impact - th.v_triple_star) <= 1e-12 * th.v_triple_star;
  if (!degenerate && v_impact < th.v_triple_star) {
    std::ostringstream msg;
    msg << "strong construction requires V >= V*** = " << th.v_triple_star << ", got V = "
        << v_impact;
    throw out_of_regime_error(msg.str());
  }

  const double gamma_deg = 1.5 * (m.alpha + m.beta);
  double gamma_back, s_dot;
  discontinuity_kind kind;
  if (degenerate) {
    gamma_back = gamma_deg;
    s_dot = m.c0;
    kind = discontinuity_kind::degenerate_shock;
  } else {
    // rho V^2 = gamma sigma(gamma), strictly increasing right of gamma_deg.
    const double target = m.density * v_impact * v_impact;
    auto eq = [&](double g) { return target - g * m.stress(g); };  // decreasing
    double hi = 2.0 * gamma_deg;
    int guard = 0;
    while (eq(hi) > 0.0 && ++guard < 200) hi *= 2.0;
    gamma_back = snapped_root(eq, gamma_deg, hi, target);
    s_dot = v_impact / gamma_back;
    kind = discontinuity_kind::shock;
  }

  wave_solution sol{m, v_impact, kinetics::auto_select, loading_regime::strong};
  sol.degenerate_shock = degenerate;
  sol.plate_strain = gamma_back;
  sol.jump = discontinuity{s_dot, 0.0, gamma_back, 0.0, -v_impact, kind};
  return sol;
}

wave_solution solve_intermediate_md(const material& m, double v_impact) {
  require_positive_velocity(v_impact);
  const threshold_set th = compute_thresholds(m);
  if (!(v_impact > th.v_star) || !(v_impact < th.v_triple_star)) {
    std::ostringstream msg;
    msg << "maximally dissipative construction requires V* < V < V***, got V = " << v_impact
        << " outside (" << th.v_star << ", " << th.v_triple_star << ")";
    throw out_of_regime_error(msg.str());
  }
  const double fh = F(m.h);
  const double target = v_impact / m.c1;
  auto eq = [&](double eta) {
    return 3.0 * eta * sqrt_nonneg(eta * eta - 1.0) + fh - F(eta) - target;
  };  // increasing
  const double eta = snapped_root(eq, 1.0, m.h, std::fmax(target, th.v_triple_star / m.c1));
  const double gamma_plus = clamp01(m.gamma_of_eta(eta), 0.0, m.alpha);
  const double gamma_minus = 1.5 * (m.alpha + m.beta) - 2.0 * gamma_plus;
  const double s_dot = m.c2 * sqrt_nonneg(eta * eta - 1.0);
  const double v_plus = -m.c1 * (fh - F(eta));

  wave_solution sol{m, v_impact, kinetics::maximally_dissipative,
                    loading_regime::intermediate};
  sol.plate_strain = gamma_minus;
  sol.jump = discontinuity{s_dot, gamma_plus, gamma_minus, v_plus, -v_impact,
                           discontinuity_kind::phase_boundary};
  sol.fan = fan_region{std::fmin(s_dot, m.c0), m.c0, gamma_plus, 0.0};
  return sol;
}

wave_solution solve_intermediate_df(const material& m, double v_impact) {
  require_positive_velocity(v_impact);
  const threshold_set th = compute_thresholds(m);
  if (!th.v_double_star) {
    std::ostringstream msg;
    msg << "dissipation-free two-wave construction needs h >= sqrt(3), got h = " << m.h;
    throw incompatible_kinetics_error(msg.str());
  }
  const double v2 = *th.v_double_star;
  const double snap = 64.0 * std::numeric_limits<double>::epsilon() * v2;
  if (!(v_impact > th.v_star) || v_impact > v2 + snap) {
    std::ostringstream msg;
    msg << "dissipation-free two-wave construction requires V* < V <= V**, got V = "
        << v_impact << " outside (" << th.v_star << ", " << v2 << "]";
    throw out_of_regime_error(msg.str());
  }
  const double fh = F(m.h);
  const double target = v_impact / m.c1;
  auto eq = [&](double eta) {
    return 2.0 * eta * sqrt_nonneg(eta * eta / 3.0 - 1.0) + fh - F(eta) - target;
  };  // increasing on [sqrt(3), h]
  const double eta =
      snapped_root(eq, std::sqrt(3.0), m.h, std::fmax(target, v2 / m.c1));
  const double gamma_plus = clamp01(m.gamma_of_eta(eta), 0.0, m.alpha);
  const double gamma_minus = (m.alpha + m.beta) - gamma_plus;
  const double s_dot = m.c2 * sqrt_nonneg(eta * eta / 3.0 - 1.0);
  const double v_plus = -m.c1 * (fh - F(eta));
  const double xi1 = std::fmin(m.c2 * sqrt_nonneg(eta * eta - 1.0), m.c0);

  wave_solution sol{m, v_impact, kinetics::dissipation_free, loading_regime::intermediate};
  sol.plate_strain = gamma_minus;
  sol.jump = discontinuity{s_dot, gamma_plus, gamma_minus, v_plus, -v_impact,
                           discontinuity_kind::phase_boundary};
  sol.fan = fan_region{xi1, m.c0, gamma_plus, 0.0};
  return sol;
}

wave_solution solve_phase_boundary_only(const material& m, double v_impact) {
  require_positive_velocity(v_impact);
  const threshold_set th = compute_thresholds(m);
  if (!th.v_double_star) {
    std::ostringstream msg;
    msg << "lone phase boundary construction needs h >= sqrt(3), got h = " << m.h;
    throw out_of_regime_error(msg.str());
  }
  const double v2 = *th.v_double_star;
  const double v3 = th.v_triple_star;
  const double snap = 64.0 * std::numeric_limits<double>::epsilon() * v3;
  if (v_impact < v2 - snap || v_impact > v3 + snap) {
    std::ostringstream msg;
    msg << "lone phase boundary construction requires V** <= V <= V***, got V = " << v_impact
        << " outside [" << v2 << ", " << v3 << "]";
    throw out_of_regime_error(msg.str());
  }
  auto s_hat = [&](double phi) {
    return sqrt_nonneg((phi * phi - m.h * phi + m.h * m.h) / 3.0 - 1.0);
  };
  const double target = v_impact / m.c1;
  auto eq = [&](double phi) { return (phi + m.h) * s_hat(phi) - target; };  // increasing
  const double phi = snapped_root(eq, m.h, 2.0 * m.h, std::fmax(target, v3 / m.c1));
  const double gamma_minus = 0.5 * ((m.beta - m.alpha) * phi + (m.alpha + m.beta));
  const double s_dot = m.c2 * s_hat(phi);

  wave_solution sol{m, v_impact, kinetics::dissipation_free, loading_regime::intermediate};
  sol.plate_strain = gamma_minus;
  sol.jump = discontinuity{s_dot, 0.0, gamma_minus, 0.0, -v_impact,
                           discontinuity_kind::phase_boundary};
  return sol;
}

wave_solution solve(const material& m, double v_impact, kinetics requested) {
  const kinetics resolved = select_kinetics(m, requested);
  const loading_class lc = classify_loading(m, v_impact);

  wave_solution sol = [&] {
    switch (lc.regime) {
      case loading_regime::weak:
        return solve_weak(m, v_impact);
      case loading_regime::strong:
        return solve_strong(m, v_impact);
      case loading_regime::intermediate:
      default:
        if (resolved == kinetics::dissipation_free) {
          const threshold_set th = compute_thresholds(m);
          if (th.v_double_star && v_impact <= *th.v_double_star) {
            return solve_intermediate_df(m, v_impact);
          }
          return solve_phase_boundary_only(m, v_impact);
        }
        return solve_intermediate_md(m, v_impact);
    }
  }();
  sol.resolved_kinetics = resolved;
  if (lc.regime == loading_regime::intermediate) {
    sol.kinetics_overridden = resolved != select_kinetics(m, kinetics::auto_select);
  }
  return sol;
}

}  // namespace ptwave
