#include "ptwave/numerics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ptwave/errors.hpp"

namespace ptwave::numerics {

double f_antiderivative(double z) {
  if (!(z >= 1.0)) {
    std::ostringstream msg;
    msg << "f_antiderivative requires zeta >= 1, got " << z;
    throw std::domain_error(msg.str());
  }
  const double u = z - 1.0;
  if (u <= 1e-4) {
    // Direct evaluation cancels near z = 1; switch to the series in
    // t = acosh(z): F = t^3/3 + t^5/15 + 2 t^7/315 + t^9/2835 + O(t^11).
    const double t = std::log1p(u + std::sqrt(u * (2.0 + u)));
    const double t2 = t * t;
    return t * t2 * (1.0 / 3.0 + t2 * (1.0 / 15.0 + t2 * (2.0 / 315.0 + t2 / 2835.0)));
  }
  // sqrt((z-1)(z+1)) avoids forming z^2 - 1, which loses digits for small u.
  const double w = std::sqrt(u * (z + 1.0));
  return 0.5 * (z * w - std::log1p(u + w));
}

namespace {

double sqrt_integrand(double t) {
  const double u = t - 1.0;
  return std::sqrt(u < 0.0 ? 0.0 : u * (t + 1.0));
}

// Classic adaptive Simpson with Richardson correction. The integrand's
// square-root behaviour at t = 1 makes plain depth-limited recursion stall
// there, so an interval is also accepted once bisection stops changing the
// midpoints in floating point.
double adaptive_simpson(double a, double fa, double b, double fb, double m,
                        double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  if (lm <= a || rm <= m) return whole;
  const double flm = sqrt_integrand(lm);
  const double frm = sqrt_integrand(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double quad_sqrt(double lo, double hi, double abs_tol) {
  if (!(lo >= 1.0) || !(hi >= lo)) {
    std::ostringstream msg;
    msg << "quad_sqrt requires 1 <= lo <= hi, got [" << lo << ", " << hi << "]";
    throw std::domain_error(msg.str());
  }
  if (!(abs_tol > 0.0)) throw std::invalid_argument("quad_sqrt tolerance must be positive");
  if (lo == hi) return 0.0;
  const double m = 0.5 * (lo + hi);
  const double fa = sqrt_integrand(lo);
  const double fb = sqrt_integrand(hi);
  const double fm = sqrt_integrand(m);
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(lo, fa, hi, fb, m, fm, whole, abs_tol, 64);
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const root_config& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || cfg.max_iterations < 1) {
    throw std::invalid_argument("find_root: tolerances must be positive and max_iterations >= 1");
  }
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    std::ostringstream msg;
    msg << "find_root: no sign change on [" << a << ", " << b << "]: f(lo)=" << fa
        << ", f(hi)=" << fb;
    throw no_sign_change_error(msg.str());
  }

  // Brent's method: bisection with inverse-quadratic / secant acceleration,
  // never leaving the bracket.
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = cfg.rel_tol * std::fabs(b) + 0.5 * cfg.abs_tol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) return b;

    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      if (2.0 * p < std::fmin(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  std::ostringstream msg;
  msg << "find_root: no convergence after " << cfg.max_iterations << " iterations on ["
      << lo << ", " << hi << "]";
  throw convergence_error(msg.str());
}

}  // namespace ptwave::numerics
