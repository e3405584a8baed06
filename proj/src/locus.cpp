#include "ptwave/locus.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ptwave/diagnostics.hpp"
#include "ptwave/numerics.hpp"

namespace ptwave {

namespace {

double F(double z) { return numerics::f_antiderivative(z); }

double sqrt_nonneg(double v) { return std::sqrt(v < 0.0 ? 0.0 : v); }

// Lone-boundary family shared by CD, CE and CF.
double phi_s_hat(double h, double phi) {
  return sqrt_nonneg((phi * phi - h * phi + h * h) / 3.0 - 1.0);
}

locus_curve sample_curve(const material& m, locus_label label, const char* param,
                         double lo, double hi, int n) {
  locus_curve c{label, param, {}};
  c.samples.reserve(static_cast<size_t>(n));
  const double fh = F(m.h);
  for (int i = 0; i < n; ++i) {
    const double p = (i == n - 1) ? hi : lo + (hi - lo) * static_cast<double>(i) /
                                             static_cast<double>(n - 1);
    locus_sample s;
    s.param = p;
    switch (label) {
      case locus_label::rarefaction_oa:
        s.s_hat = sqrt_nonneg(p * p - 1.0);
        s.v_hat = fh - F(p);
        s.gamma_plus = s.gamma_minus = m.gamma_of_eta(p);
        break;
      case locus_label::segment_bc:
        s.s_hat = sqrt_nonneg(p * p - 1.0);
        s.v_hat = 3.0 * p * s.s_hat + fh - F(p);
        s.gamma_plus = m.gamma_of_eta(p);
        s.gamma_minus = 1.5 * (m.alpha + m.beta) - 2.0 * s.gamma_plus;
        break;
      case locus_label::segment_cd:
      case locus_label::segment_ce:
      case locus_label::segment_cf:
        s.s_hat = phi_s_hat(m.h, p);
        s.v_hat = (p + m.h) * s.s_hat;
        s.gamma_plus = 0.0;
        s.gamma_minus = 0.5 * ((m.beta - m.alpha) * p + (m.alpha + m.beta));
        break;
      case locus_label::segment_ef:
        s.s_hat = sqrt_nonneg(p * p / 3.0 - 1.0);
        s.v_hat = 2.0 * p * s.s_hat + fh - F(p);
        s.gamma_plus = m.gamma_of_eta(p);
        s.gamma_minus = (m.alpha + m.beta) - s.gamma_plus;
        break;
      case locus_label::axis_be_bf:
        s.s_hat = 0.0;
        s.v_hat = fh - F(p);
        s.gamma_plus = m.gamma_of_eta(p);
        s.gamma_minus = g_zero_speed(m, s.gamma_plus)
                            .value_or(std::numeric_limits<double>::quiet_NaN());
        break;
    }
    c.samples.push_back(s);
  }
  return c;
}

}  // namespace

const char* locus_label_name(locus_label label) {
  switch (label) {
    case locus_label::rarefaction_oa: return "OA";
    case locus_label::segment_bc: return "BC";
    case locus_label::segment_cd: return "CD";
    case locus_label::segment_ce: return "CE";
    case locus_label::segment_cf: return "CF";
    case locus_label::segment_ef: return "EF";
    case locus_label::axis_be_bf: return "AXIS";
  }
  return "?";
}

locus_curve curve(const material& m, locus_label label, int n, double cd_phi_max) {
  if (n < 2) throw std::invalid_argument("curve needs at least 2 samples");
  const material_case mc = classify_material(m);
  const bool below_sqrt3 = mc == material_case::c;
  const double r3 = std::sqrt(3.0);

  switch (label) {
    case locus_label::rarefaction_oa:
      return sample_curve(m, label, "eta", 1.0, m.h, n);
    case locus_label::segment_bc:
      return sample_curve(m, label, "eta", 1.0, m.h, n);
    case locus_label::segment_cd: {
      const double hi = cd_phi_max > 0.0 ? cd_phi_max : 4.0 * m.h;
      if (hi <= 2.0 * m.h) {
        std::ostringstream msg;
        msg << "shock segment CD needs phi_max > 2h = " << 2.0 * m.h << ", got " << hi;
        throw std::invalid_argument(msg.str());
      }
      return sample_curve(m, label, "phi", 2.0 * m.h, hi, n);
    }
    case locus_label::segment_ce:
      if (below_sqrt3) {
        throw std::domain_error("curve CE does not exist for h < sqrt(3)");
      }
      return sample_curve(m, label, "phi", m.h, 2.0 * m.h, n);
    case locus_label::segment_cf: {
      if (!below_sqrt3) {
        throw std::domain_error("curve CF does not exist for h >= sqrt(3)");
      }
      const double lo = 0.5 * (m.h + std::sqrt(3.0 * (4.0 - m.h * m.h)));
      return sample_curve(m, label, "phi", lo, 2.0 * m.h, n);
    }
    case locus_label::segment_ef:
      if (below_sqrt3) {
        throw std::domain_error("curve EF does not exist for h < sqrt(3)");
      }
      return sample_curve(m, label, "eta", r3, m.h, n);
    case locus_label::axis_be_bf:
      return sample_curve(m, label, "eta", 1.0, below_sqrt3 ? m.h : r3, n);
  }
  throw std::invalid_argument("unknown locus label");
}

std::vector<locus_curve> all_curves(const material& m, int n, double cd_phi_max) {
  const bool below_sqrt3 = classify_material(m) == material_case::c;
  std::vector<locus_curve> out;
  out.push_back(curve(m, locus_label::rarefaction_oa, n));
  out.push_back(curve(m, locus_label::segment_bc, n));
  out.push_back(curve(m, locus_label::segment_cd, n, cd_phi_max));
  if (below_sqrt3) {
    out.push_back(curve(m, locus_label::segment_cf, n));
  } else {
    out.push_back(curve(m, locus_label::segment_ce, n));
    out.push_back(curve(m, locus_label::segment_ef, n));
  }
  out.push_back(curve(m, locus_label::axis_be_bf, n));
  return out;
}

std::vector<region_edge> region_boundary(const material& m, int n) {
  if (n < 2) throw std::invalid_argument("region_boundary needs at least 2 samples");
  const material_case mc = classify_material(m);
  const double ab = m.alpha + m.beta;

  auto line = [n](const std::string& label, double x0, double y0, double x1, double y1) {
    region_edge e{label, {}};
    e.points.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(n - 1);
      e.points.push_back({x0 + (x1 - x0) * t, y0 + (y1 - y0) * t});
    }
    return e;
  };
  auto g_arc = [&](const std::string& label, double gp0, double gp1) {
    region_edge e{label, {}};
    e.points.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double gp = gp0 + (gp1 - gp0) * static_cast<double>(i) /
                                  static_cast<double>(n - 1);
      const double gm = g_zero_speed(m, gp).value_or(std::numeric_limits<double>::quiet_NaN());
      e.points.push_back({gp, gm});
    }
    return e;
  };

  const double b_gm = 0.5 * (3.0 * m.beta - m.alpha);  // g(alpha)
  std::vector<region_edge> edges;
  edges.push_back(line("BC", m.alpha, b_gm, 0.0, 1.5 * ab));
  if (mc == material_case::c) {
    const double g0 = *g_zero_speed(m, 0.0);  // real: h < sqrt(3) forces beta > 3 alpha
    edges.push_back(line("CF", 0.0, 1.5 * ab, 0.0, g0));
    edges.push_back(g_arc("FB", 0.0, m.alpha));
  } else if (mc == material_case::b) {
    edges.push_back(line("CE", 0.0, 1.5 * ab, 0.0, ab));
    edges.push_back(g_arc("EB", 0.0, m.alpha));
  } else {
    const double gp_f = std::fmax(0.0, m.gamma_of_eta(std::sqrt(3.0)));
    edges.push_back(line("CE", 0.0, 1.5 * ab, 0.0, ab));
    edges.push_back(line("EF", 0.0, ab, gp_f, ab - gp_f));
    edges.push_back(g_arc("FB", gp_f, m.alpha));
  }
  return edges;
}

}  // namespace ptwave
