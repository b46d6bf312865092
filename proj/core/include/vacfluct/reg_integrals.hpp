#pragma once

#include "vacfluct/params.hpp"
#include "vacfluct/quadrature.hpp"

namespace vacfluct {

// The two basic integrals over the shifted measuring window,
//
//   I(nu, alpha)  = int_nu^{nu+1} du (1 - alpha u) / (u^2 - sigma^2)^p,
//
// with p = 2 for the E_z chain and p = 3 for the E_x chain.  When the window
// straddles a pole at u = +/-sigma the value is *defined* as J(nu) - J(nu+1),
// where J is the real part of the same integrand integrated along the
// vertical half-line nu + i t, t in [0, inf).
enum class IntegralOrder { quadratic, cubic };

// (f(u) + f(-u)) / 2
template <class F> double symmetrize(const F &f, double u) {
  return 0.5 * (f(u) + f(-u));
}

// Closed form of the vertical-line integral.  alpha must be 0 or 1.
// sgn(0) is taken as 0; the logarithm of the squared ratio is evaluated as an
// inverse hyperbolic tangent so that it stays accurate for |nu| << sigma and
// |nu| >> sigma alike.  Throws SingularPointError at |nu| == sigma.
double j_closed(double nu, int alpha, double sigma, IntegralOrder order);

// J(nu) - J(nu + 1).
double i_reg(double nu, int alpha, double sigma, IntegralOrder order);

// I(nu, 1) + nu I(nu, 0); with tilde the cubic combination
// 2 sigma^2 (I~(nu, 1) + nu I~(nu, 0)) is added.
double big_i(double nu, double sigma, bool tilde);

// big_i in extended precision.  The cubic chain carries double poles that
// cancel only between nu and -nu after symmetrisation; callers that sample it
// close to a pole need the extra bits.
long double big_i_extended(long double nu, long double sigma, bool tilde);

// Z(sigma, nu) = |nu| / (16 sigma) ln(((|nu| + sigma) / (|nu| - sigma))^2)
// W(sigma, nu) = nu^2 / (4 (nu^2 - sigma^2)) - Z(sigma, nu)
// Both are even in nu and in sigma; sigma == 0 is rejected.
double z_fn(double sigma, double nu);
double w_fn(double sigma, double nu);

// Z(sigma, nu) - 1/4, free of the cancellation the naive difference suffers
// when sigma << |nu|.
double z_excess(double sigma, double nu);

// Anti-correlated combinations that enter the smeared dispersions:
//   Z(sigma, 1 + nu) - Z(sigma, nu)   and   W(sigma, 1 + nu) - W(sigma, nu).
double z_bracket(double sigma, double nu);
double w_bracket(double sigma, double nu);

// Finite-sigma Gaussian averages of the brackets divided by sigma^2.  A uses
// split-at-singularity integration across the logarithmic spikes of Z, B
// the principal value across the simple poles of W.
enum class Coefficient { A, B };
Estimate coeff_hat(double sigma, double beta, Coefficient which,
                   const QuadratureSpec &quad);

// Values the late-time estimates of the smeared analysis settle on when
// beta << 1.  Audited against coeff_hat, never used in place of it.
inline constexpr double kLateTimeEstimateA = 1.0 / 12.0;
inline constexpr double kLateTimeEstimateB = 1.0 / 6.0;

} // namespace vacfluct
