#include "vacfluct/reg_integrals.hpp"

#include <cmath>
#include <string>

#include "vacfluct/errors.hpp"
#include "vacfluct/smearing.hpp"

namespace vacfluct {

namespace {

void require_alpha(int alpha) {
  if (alpha != 0 && alpha != 1)
    throw DomainError("alpha", "must be 0 or 1, got " + std::to_string(alpha));
}

void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw DomainError("sigma", "must be a finite positive number");
}

template <class R> R sgn(R x) { return R((x > 0) - (x < 0)); }

// ln(((a + s) / (a - s))^2) for a, s >= 0, a != s.
template <class R> R log_ratio_sq(R a, R s) {
  using std::atanh;
  return a > s ? R(4) * atanh(s / a) : R(4) * atanh(a / s);
}

template <class R> void reject_pole(R nu, R sigma, const char *what) {
  if (std::fabs(nu) == sigma)
    throw SingularPointError(static_cast<double>(nu), std::string(what) + ": |nu| == sigma");
}

// sum_{k>=1} c_k r^{2k} until the terms stop mattering; r < 1/8 by contract.
template <class Coef> double even_series(double r, Coef coef) {
  const double r2 = r * r;
  double power = r2, sum = 0.0;
  for (int k = 1; k < 40; ++k) {
    const double term = coef(k) * power;
    sum += term;
    if (std::fabs(term) <= 1e-17 * std::fabs(sum))
      break;
    power *= r2;
  }
  return sum;
}

constexpr double kSeriesCutoff = 0.125;

template <class R> R j_closed_impl(R nu, int alpha, R sigma, IntegralOrder order) {
  require_alpha(alpha);
  require_sigma(static_cast<double>(sigma));
  reject_pole(nu, sigma, "j_closed");
  const R a = std::fabs(nu);
  const R s2 = sigma * sigma;
  const R d = (a - sigma) * (a + sigma); // nu^2 - sigma^2
  const R log_term = sgn(nu) * log_ratio_sq(a, sigma);
  if (order == IntegralOrder::quadratic)
    return (nu - R(alpha) * s2) / (R(2) * s2 * d) - log_term / (R(8) * s2 * sigma);
  const R d2 = d * d;
  return -R(alpha) / (R(4) * d2) + nu * (R(5) * s2 - R(3) * nu * nu) / (R(8) * s2 * s2 * d2) +
         R(3) * log_term / (R(32) * s2 * s2 * sigma);
}

template <class R> R i_reg_impl(R nu, int alpha, R sigma, IntegralOrder order) {
  return j_closed_impl(nu, alpha, sigma, order) - j_closed_impl(nu + R(1), alpha, sigma, order);
}

template <class R> R big_i_impl(R nu, R sigma, bool tilde) {
  constexpr auto q = IntegralOrder::quadratic;
  constexpr auto c = IntegralOrder::cubic;
  R value = i_reg_impl(nu, 1, sigma, q) + nu * i_reg_impl(nu, 0, sigma, q);
  if (tilde)
    value += R(2) * sigma * sigma * (i_reg_impl(nu, 1, sigma, c) + nu * i_reg_impl(nu, 0, sigma, c));
  return value;
}

} // namespace

double j_closed(double nu, int alpha, double sigma, IntegralOrder order) {
  return j_closed_impl(nu, alpha, sigma, order);
}

double i_reg(double nu, int alpha, double sigma, IntegralOrder order) {
  return i_reg_impl(nu, alpha, sigma, order);
}

double big_i(double nu, double sigma, bool tilde) { return big_i_impl(nu, sigma, tilde); }

long double big_i_extended(long double nu, long double sigma, bool tilde) {
  return big_i_impl(nu, sigma, tilde);
}

double z_fn(double sigma, double nu) {
  if (sigma == 0.0 || !std::isfinite(sigma))
    throw DomainError("sigma", "must be finite and non-zero");
  const double s = std::fabs(sigma);
  const double a = std::fabs(nu);
  reject_pole(a, s, "z_fn");
  if (a == 0.0)
    return 0.0;
  return a > s ? a / (4.0 * s) * std::atanh(s / a)
               : a / (4.0 * s) * std::atanh(a / s);
}

double z_excess(double sigma, double nu) {
  if (sigma == 0.0 || !std::isfinite(sigma))
    throw DomainError("sigma", "must be finite and non-zero");
  const double s = std::fabs(sigma);
  const double a = std::fabs(nu);
  if (a > s) {
    const double r = s / a;
    if (r < kSeriesCutoff)
      return 0.25 * even_series(r, [](int k) { return 1.0 / (2 * k + 1); });
  }
  return z_fn(sigma, nu) - 0.25;
}

double w_fn(double sigma, double nu) {
  if (sigma == 0.0 || !std::isfinite(sigma))
    throw DomainError("sigma", "must be finite and non-zero");
  const double s = std::fabs(sigma);
  const double a = std::fabs(nu);
  reject_pole(a, s, "w_fn");
  if (a > s) {
    const double r = s / a;
    if (r < kSeriesCutoff)
      return 0.25 *
             even_series(r, [](int k) { return 2.0 * k / (2.0 * k + 1.0); });
  }
  return a * a / (4.0 * (a - s) * (a + s)) - z_fn(s, a);
}

double z_bracket(double sigma, double nu) {
  return z_excess(sigma, 1.0 + nu) - z_excess(sigma, nu);
}

double w_bracket(double sigma, double nu) {
  return w_fn(sigma, 1.0 + nu) - w_fn(sigma, nu);
}

Estimate coeff_hat(double sigma, double beta, Coefficient which,
                   const QuadratureSpec &quad) {
  require_sigma(sigma);
  if (!(beta > 0.0))
    throw DomainError("beta", "coeff_hat needs a strictly positive width");
  const double points[] = {-sigma, 0.0, sigma};
  GaussianTransformSpec spec{beta, quad, PoleStrategy::split_log};
  Estimate g;
  if (which == Coefficient::A) {
    g = gauss_transform_step([sigma](double v) { return z_excess(sigma, v); }, points, spec);
  } else {
    spec.pole_strategy = PoleStrategy::principal_value;
    g = gauss_transform_step([sigma](double v) { return w_fn(sigma, v); }, points, spec);
  }
  return g.scaled(1.0 / (sigma * sigma));
}

} // namespace vacfluct
