#include "ptwave/material.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ptwave/errors.hpp"
#include "ptwave/numerics.hpp"

namespace ptwave {

material::material(double young_modulus_, double density_, double alpha_, double beta_)
    : young_modulus(young_modulus_), density(density_), alpha(alpha_), beta(beta_) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !(alpha > 0.0) || !(alpha < beta)) {
    std::ostringstream msg;
    msg << "invalid material: requires 0<alpha<beta (alpha=" << alpha << ", beta=" << beta
        << ")";
    throw std::invalid_argument(msg.str());
  }
  if (!std::isfinite(young_modulus) || !(young_modulus > 0.0)) {
    std::ostringstream msg;
    msg << "invalid material: requires young_modulus > 0 (got " << young_modulus << ")";
    throw std::invalid_argument(msg.str());
  }
  if (!std::isfinite(density) || !(density > 0.0)) {
    std::ostringstream msg;
    msg << "invalid material: requires density > 0 (got " << density << ")";
    throw std::invalid_argument(msg.str());
  }
  c0 = std::sqrt(young_modulus * alpha * beta / density);
  const double width = beta - alpha;
  c1 = width * width / (4.0 * std::sqrt(alpha * beta)) * c0;
  c2 = 2.0 * c1 / width;
  h = (beta + alpha) / width;
}

material material::dimensionless(double alpha_, double beta_) {
  return material(1.0, 1.0, alpha_, beta_);
}

double material::stress(double gamma) const {
  if (!(gamma > -1.0)) {
    std::ostringstream msg;
    msg << "stress requires gamma > -1, got " << gamma;
    throw std::domain_error(msg.str());
  }
  return young_modulus * gamma *
         (gamma * gamma / 3.0 - 0.5 * (alpha + beta) * gamma + alpha * beta);
}

double material::wave_speed(double gamma) const {
  if (!(gamma >= 0.0)) {
    std::ostringstream msg;
    msg << "wave_speed requires gamma >= 0, got " << gamma;
    throw std::domain_error(msg.str());
  }
  if (gamma > alpha && gamma < beta) {
    std::ostringstream msg;
    msg << "wave_speed undefined on the spinodal (" << alpha << ", " << beta << "), got "
        << gamma;
    throw spinodal_domain_error(msg.str());
  }
  // Both factors share a sign on either branch; clamp the roundoff dip at
  // the branch endpoints.
  const double rad = (gamma - alpha) * (gamma - beta) / (alpha * beta);
  return c0 * std::sqrt(rad < 0.0 ? 0.0 : rad);
}

double material::eta_of_gamma(double gamma) const {
  return (alpha + beta - 2.0 * gamma) / (beta - alpha);
}

double material::gamma_of_eta(double eta) const {
  return 0.5 * ((alpha + beta) - eta * (beta - alpha));
}

double material::integral_c(double gamma_lo, double gamma_hi) const {
  // A few ulp of slack: strains produced by the solvers land on the branch
  // endpoints only up to roundoff.
  const double slack = 16.0 * 2.220446049250313e-16 * alpha;
  if (!(gamma_lo >= -slack) || !(gamma_hi >= gamma_lo) || !(gamma_hi <= alpha + slack)) {
    std::ostringstream msg;
    msg << "integral_c requires 0 <= gamma_lo <= gamma_hi <= alpha, got [" << gamma_lo
        << ", " << gamma_hi << "] with alpha=" << alpha;
    throw std::domain_error(msg.str());
  }
  const double eta_lo = std::fmax(1.0, eta_of_gamma(gamma_lo));
  const double eta_hi = std::fmax(1.0, eta_of_gamma(gamma_hi));
  if (eta_hi >= eta_lo) return 0.0;
  return c1 * (numerics::f_antiderivative(eta_lo) - numerics::f_antiderivative(eta_hi));
}

}  // namespace ptwave
