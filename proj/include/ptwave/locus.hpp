#pragma once

#include <string>
#include <vector>

#include "ptwave/material.hpp"

namespace ptwave {

// The named pieces of the solution locus in the dimensionless
// (s_dot/c2, V/c1) plane. OA: rarefaction fans; BC: sonic (maximally
// dissipative) phase boundaries; CD: shocks; CE/CF: lone phase boundaries
// (h >= sqrt(3) / h < sqrt(3)); EF: zero-driving-force phase boundaries;
// axis: stationary phase boundaries.
enum class locus_label {
  rarefaction_oa,
  segment_bc,
  segment_cd,
  segment_ce,
  segment_cf,
  segment_ef,
  axis_be_bf,
};

const char* locus_label_name(locus_label label);

struct locus_sample {
  double param;   // eta or phi
  double s_hat;   // s_dot / c2
  double v_hat;   // V / c1
  double gamma_plus;
  double gamma_minus;
};

struct locus_curve {
  locus_label label;
  std::string parameter_name;  // "eta" or "phi"
  std::vector<locus_sample> samples;
};

// Samples one labeled curve with n points, endpoints included exactly.
// cd_phi_max caps the unbounded shock segment CD; nonpositive means the
// default 4h. Throws std::domain_error when the label does not exist for
// the material's case (CE/EF need h >= sqrt(3), CF needs h < sqrt(3)).
locus_curve curve(const material& m, locus_label label, int n,
                  double cd_phi_max = 0.0);

// Every curve available for the material's case, in a fixed order.
std::vector<locus_curve> all_curves(const material& m, int n,
                                    double cd_phi_max = 0.0);

struct region_vertex {
  double gamma_plus;
  double gamma_minus;
};

struct region_edge {
  std::string label;  // endpoint pair, e.g. "BC"
  std::vector<region_vertex> points;
};

// Boundary of the admissible (gamma+, gamma-) region: the quadrilateral
// BCEF for h > sqrt(3), the triangle BCE at h = sqrt(3), the triangle BCF
// below. Each edge is an n-point polyline.
std::vector<region_edge> region_boundary(const material& m, int n);

}  // namespace ptwave
