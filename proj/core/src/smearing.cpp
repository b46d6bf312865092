#include "vacfluct/smearing.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "vacfluct/errors.hpp"

namespace vacfluct {

namespace {

std::vector<double> points_inside(std::span<const double> pts, double lo, double hi) {
  std::vector<double> inside;
  for (double p : pts)
    if (std::isfinite(p) && p > lo && p < hi)
      inside.push_back(p);
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  return inside;
}

Estimate hermite_pair(const RealFunction &f, double center, double beta,
                      const QuadratureSpec &quad) {
  auto apply = [&](int n) {
    const auto &rule = numeric::gauss_hermite(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      sum += rule.weights[i] * f(center + beta * rule.nodes[i]);
    return sum;
  };
  const int n = quad.hermite_nodes;
  const double coarse = apply(n);
  const double fine = apply(2 * n);
  Estimate e;
  e.value = fine;
  e.error = std::fabs(fine - coarse);
  e.evaluations = 3L * n;
  e.converged = e.error <= std::max(quad.abs_tol, quad.rel_tol * std::fabs(fine));
  return e;
}

// Principal value across every point in `poles` (sorted, inside (lo, hi)).
Estimate principal_value(const RealFunction &g, const std::vector<double> &poles,
                         double lo, double hi, const QuadratureSpec &quad) {
  Estimate total;
  double cursor = lo;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const double p = poles[i];
    const double left = i == 0 ? p - lo : 0.5 * (p - poles[i - 1]);
    const double right = i + 1 == poles.size() ? hi - p : 0.5 * (poles[i + 1] - p);
    const double delta = std::min(left, right);

    if (p - delta > cursor)
      total += numeric::integrate(g, cursor, p - delta, quad);

    // Snap the offset to the ulp grid of a coarse anchor so that p +/- s, and
    // shifts of those by O(1) inside the integrand, are all exact; otherwise
    // the rounding of the arguments leaves an uncancelled eps / s^2 residue.
    const double anchor = 4.0 * (std::fabs(p) + 1.0);
    auto paired = [&g, p, anchor](double s) {
      const double exact = (anchor + s) - anchor;
      return g(p + exact) + g(p - exact);
    };
    const double skip = quad.singularity_exclusion * delta;

    // Each half of the pair is ~1/s and carries a relative rounding error of
    // a few eps that the pairing cannot cancel, so the attainable absolute
    // accuracy is eps times the integral of the unpaired magnitudes.
    auto magnitude = [&g, p, anchor](double s) {
      const double exact = (anchor + s) - anchor;
      return std::fabs(g(p + exact)) + std::fabs(g(p - exact));
    };
    QuadratureSpec loose = quad;
    loose.rel_tol = 1e-3;
    const double noise =
        64.0 * std::numeric_limits<double>::epsilon() *
        numeric::try_integrate(magnitude, skip, delta, loose).value;
    QuadratureSpec window = quad;
    window.abs_tol = std::max(quad.abs_tol, noise);
    total += numeric::integrate(paired, skip, delta, window);
    cursor = p + delta;
  }
  if (cursor < hi)
    total += numeric::integrate(g, cursor, hi, quad);
  return total;
}

} // namespace

Estimate gauss_transform(const RealFunction &f,
                         std::span<const double> singular_points,
                         const GaussianTransformSpec &spec) {
  const double beta = spec.beta;
  const double c = spec.center;
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw DomainError("beta", "Gaussian width must be finite and >= 0");
  if (!std::isfinite(c))
    throw DomainError("center", "must be finite");
  spec.quad.validate();

  if (beta == 0.0) {
    for (double p : singular_points)
      if (p == c)
        throw SingularPointError(c, "beta == 0 needs f at the centre, which is singular");
    return {f(c), 0.0, 1, true};
  }

  if (singular_points.empty()) {
    Estimate gh = hermite_pair(f, c, beta, spec.quad);
    if (gh.converged)
      return gh;
  }

  const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * beta);
  const double inv_two_b2 = 0.5 / (beta * beta);
  RealFunction g = [&](double v) {
    const double d = v - c;
    return norm * std::exp(-d * d * inv_two_b2) * f(v);
  };
  const double L = spec.quad.tail_truncation * beta;
  const auto inside = points_inside(singular_points, c - L, c + L);

  if (spec.pole_strategy == PoleStrategy::principal_value && !inside.empty())
    return principal_value(g, inside, c - L, c + L, spec.quad);
  return numeric::integrate(g, c - L, c + L, spec.quad, inside);
}

Estimate gauss_transform_step(const RealFunction &f,
                              std::span<const double> singular_points,
                              const GaussianTransformSpec &spec) {
  GaussianTransformSpec upper = spec;
  upper.center += 1.0;
  Estimate e = gauss_transform(f, singular_points, upper);
  e += gauss_transform(f, singular_points, spec).scaled(-1.0);
  return e;
}

Estimate smeared_kernel(const KernelHandle &K, double T, double tau,
                        const GaussianTransformSpec &spec) {
  if (!(tau > 0.0))
    throw DomainError("measure_time_tau", "must be > 0");
  if (spec.center != 0.0) {
    GaussianTransformSpec centred = spec;
    centred.center = 0.0;
    return smeared_kernel(K, T + tau * spec.center, tau, centred);
  }
  const double beta = spec.beta;
  if (beta == 0.0)
    return {K(T), 0.0, 1, true};

  std::vector<double> shifted;
  for (double p : K.singular_points) {
    shifted.push_back((p - T) / tau);
    shifted.push_back((-p - T) / tau);
  }
  const double L = spec.quad.tail_truncation * beta;
  const auto inside = points_inside(shifted, -L, L);

  if (inside.empty() || !K.continuation) {
    RealFunction shifted_kernel = [&K, T, tau](double v) { return K(T + tau * v); };
    return gauss_transform(shifted_kernel, shifted, spec);
  }

  // Real part along nu + i h.  Only real poles lie between this line and
  // the real axis, so it equals the +i0 prescription.
  using cplx = std::complex<double>;
  const double h = 0.5 * beta;
  const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * beta);
  RealFunction line = [&](double x) {
    const cplx v(x, h);
    const cplx weight = norm * std::exp(-v * v / (2.0 * beta * beta));
    return std::real(weight * K.continuation(T + tau * v));
  };
  return numeric::integrate(line, -L, L, spec.quad, inside);
}

} // namespace vacfluct
