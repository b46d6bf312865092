#include "vacfluct/switching.hpp"

#include <cmath>
#include <numbers>

#include "vacfluct/errors.hpp"
#include "vacfluct/reg_integrals.hpp"

namespace vacfluct {

void LorentzPlateau::validate() const {
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw DomainError("measure_time_tau", "plateau duration must be > 0");
  if (!(mu >= 0.0) || !std::isfinite(mu))
    throw DomainError("switching_mu", "switching parameter must be >= 0");
}

double LorentzPlateau::tail_time() const { return std::numbers::pi * mu * tau; }

double lorentz_plateau_eval(const LorentzPlateau &F, double t) {
  F.validate();
  const double x = std::fabs(t) / F.tau - 0.5;
  if (x <= 0.0)
    return 1.0;
  if (F.mu == 0.0)
    return 0.0;
  const double m2 = F.mu * F.mu;
  return m2 / (x * x + m2);
}

PlateauMoments plateau_moments(const LorentzPlateau &F, const QuadratureSpec &quad) {
  F.validate();
  PlateauMoments m;
  m.plateau_area = F.tau;
  if (F.mu == 0.0)
    return m;
  RealFunction tail = [&F](double t) { return lorentz_plateau_eval(F, t); };
  m.tail_area = numeric::integrate_to_infinity(tail, 0.5 * F.tau, F.mu * F.tau, quad)
                    .scaled(2.0);
  return m;
}

double f_cal(double chi) {
  if (!(chi > 0.0))
    throw DomainError("chi", "f_cal is defined for chi > 0; use f_cal_at_zero()");
  if (std::isinf(chi))
    return f_cal_at_infinity();
  const double c2 = chi * chi;
  const double q = c2 + 4.0;
  return (1.0 - 1.0 / q) * std::atan(chi) - std::log1p(c2) / (chi * q);
}

double f_cal_at_infinity() { return 0.5 * std::numbers::pi; }

Estimate measuring_integral(const KernelHandle &K, double tau, double nu,
                            const QuadratureSpec &quad, MeasuringRoute route) {
  if (!(tau > 0.0))
    throw DomainError("measure_time_tau", "must be > 0");

  if (route == MeasuringRoute::regularized) {
    if (!K.em)
      throw DomainError("kernel", "the regularised route exists only for the "
                                  "electromagnetic correlators");
    const double sigma = 2.0 * K.distance_z / tau;
    const double pref = 2.0 / (std::numbers::pi * std::numbers::pi * tau * tau);
    const bool tilde = *K.em == EmComponent::xx;
    const double sym = symmetrize([&](double v) { return big_i(v, sigma, tilde); }, nu);
    return {(tilde ? -pref : pref) * sym, 0.0, 0, true};
  }

  for (double p : K.singular_points) {
    for (double xi : {p / tau - nu, -p / tau - nu, p / tau + nu, -p / tau + nu})
      if (xi >= 0.0 && xi <= 1.0)
        throw SingularPointError(
            xi, "kernel pole inside the measuring window; use the regularized route");
  }
  RealFunction integrand = [&](double xi) {
    return (1.0 - xi) * 0.5 * (K(tau * (xi + nu)) + K(tau * (xi - nu)));
  };
  return numeric::integrate(integrand, 0.0, 1.0, quad).scaled(2.0 * tau * tau);
}

FullIntegralTerms full_integral(const KernelHandle &K, const LorentzPlateau &F,
                                double nu, const QuadratureSpec &quad,
                                FullIntegralOptions options) {
  F.validate();
  if (K.decay_class == DecayClass::non_decaying && !options.allow_non_decaying)
    throw DomainError("kernel",
                      "non-decaying kernel: the plateau/tail decomposition omits "
                      "the cross term 2 pi mu tau^2 (exposed by K = const)");
  if (K.is_singular())
    throw SingularPointError(K.singular_points.front(),
                             "tail integrals run over every |T| >= 0 and would "
                             "cross the kernel poles");

  const double tau = F.tau, mu = F.mu;
  FullIntegralTerms terms;
  terms.measuring = measuring_integral(K, tau, nu, quad);
  terms.total = terms.measuring;
  if (mu == 0.0)
    return terms;

  // mu tau (chi +/- lambda) with lambda = nu / mu, written without the
  // division so that mu -> 0 stays exact.
  const double mt = mu * tau, shift = tau * nu;
  auto sym = [&](double chi, double offset) {
    return 0.5 * (K(mt * chi + offset + shift) + K(mt * chi + offset - shift));
  };

  RealFunction tail_integrand = [&](double chi) {
    return sym(chi, 0.0) / (chi * chi + 4.0);
  };
  RealFunction cross_integrand = [&](double chi) {
    return (sym(chi, 0.0) - sym(chi, tau)) * f_cal(chi);
  };

  const double c = 4.0 * mu * mu * tau * tau;
  terms.tail = numeric::integrate_to_infinity(tail_integrand, 0.0, 1.0, quad)
                   .scaled(std::numbers::pi * c);
  terms.cross =
      numeric::integrate_to_infinity(cross_integrand, 0.0, 1.0, quad).scaled(c);
  terms.total += terms.tail;
  terms.total += terms.cross;
  return terms;
}

} // namespace vacfluct
