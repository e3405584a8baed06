#pragma once

#include <functional>

namespace ptwave::numerics {

struct root_config {
  double rel_tol = 1e-13;
  double abs_tol = 1e-14;
  int max_iterations = 200;
};

// Antiderivative of sqrt(z^2 - 1) vanishing at z = 1:
//   F(z) = (z sqrt(z^2-1) - ln(z + sqrt(z^2-1))) / 2,  z >= 1.
// Stable against cancellation as z -> 1+.
double f_antiderivative(double z);

// Integral of sqrt(z^2 - 1) over [lo, hi], 1 <= lo <= hi, by adaptive
// Simpson quadrature. Exists as an independent cross-check on
// f_antiderivative; production code should prefer the closed form.
double quad_sqrt(double lo, double hi, double abs_tol = 1e-12);

// Brent's method on [lo, hi]. Requires f(lo) and f(hi) of opposite sign
// (throws no_sign_change_error otherwise); throws convergence_error if the
// iteration budget is exhausted.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const root_config& cfg = {});

}  // namespace ptwave::numerics
