#pragma once

#include <functional>
#include <span>
#include <vector>

#include "vacfluct/params.hpp"

namespace vacfluct {

using RealFunction = std::function<double(double)>;

// Value of a numerical integral together with its error estimate.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;

  Estimate &operator+=(const Estimate &o) {
    value += o.value;
    error += o.error;
    evaluations += o.evaluations;
    converged = converged && o.converged;
    return *this;
  }
  Estimate scaled(double c) const {
    Estimate r = *this;
    r.value *= c;
    r.error *= (c < 0 ? -c : c);
    return r;
  }
};

namespace numeric {

// Globally adaptive 21-point Gauss-Kronrod integration over [a, b] with
// optional interior break points.  Nodes never touch interval end points,
// so integrable end-point singularities (logarithms, inverse square roots)
// placed at a break are handled by subdivision.  The returned estimate has
// converged == false when the tolerance could not be met; `integrate`
// throws QuadratureError in that case, `try_integrate` does not.
Estimate try_integrate(const RealFunction &f, double a, double b,
                       const QuadratureSpec &spec,
                       std::span<const double> breaks = {});
Estimate integrate(const RealFunction &f, double a, double b,
                   const QuadratureSpec &spec,
                   std::span<const double> breaks = {});

// Integral over [a, inf) by consecutive panels of doubling width starting
// with `first_panel`.  Summation stops once two successive panels fall
// below the tolerance relative to the running total.
Estimate try_integrate_to_infinity(const RealFunction &f, double a,
                                   double first_panel, const QuadratureSpec &spec);
Estimate integrate_to_infinity(const RealFunction &f, double a,
                               double first_panel, const QuadratureSpec &spec);

// Nodes and weights for E[g(X)], X ~ N(0, 1): sum_i w_i g(x_i).  Rules are
// computed once per node count by the Golub-Welsch eigenvalue method and
// cached.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussHermiteRule &gauss_hermite(int n);

} // namespace numeric
} // namespace vacfluct
