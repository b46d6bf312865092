#pragma once

#include <cstdint>
#include <string>

#include "vacfluct/kernels.hpp"
#include "vacfluct/params.hpp"
#include "vacfluct/quadrature.hpp"
#include "vacfluct/reg_integrals.hpp"
#include "vacfluct/switching.hpp"

// Brute-force evaluators that share no algebra with the closed forms they
// check.  Slow on purpose.
namespace vacfluct {

struct OracleReport {
  std::string target_name;
  double closed_form_value = 0.0;
  double oracle_value = 0.0;
  double rel_deviation = 0.0; // |closed - oracle| / |oracle| (absolute if oracle == 0)
  long nodes_used = 0;
};

OracleReport make_oracle_report(std::string target_name, double closed_form_value,
                                const Estimate &oracle_value);

// J(nu, alpha) straight from its contour definition: the integrand
// (1 - alpha w) / (w^2 - sigma^2)^p on w = nu + i t, t >= 0, with dw = i dt,
// so J = -int_0^inf Im[...] dt.
Estimate j_vertical_oracle(double nu, int alpha, double sigma, IntegralOrder order,
                           const QuadratureSpec &quad);

// int_nu^{nu+1} (1 - alpha u) / (u^2 - sigma^2)^p du by ordinary quadrature.
// Throws SingularPointError if +/-sigma lies in [nu, nu + 1].
Estimate direct_interval_oracle(double nu, int alpha, double sigma,
                                IntegralOrder order, const QuadratureSpec &quad);

// int int F(t') F(t'') K(t' - t'' + tau nu) dt' dt'' with F the Lorentz
// plateau (mu == 0: sudden switching).  Each tail is mapped to a finite
// angle, t = tau/2 + mu tau tan(theta), on which F dt = mu tau dtheta, and
// the nine plateau/tail segment pairs are integrated as nested adaptive
// one-dimensional integrals.  Kernels with poles are refused.
Estimate double_integral_oracle(const KernelHandle &K, const LorentzPlateau &F,
                                double nu, const QuadratureSpec &quad);

// Principal value of G_beta[W(sigma, 1 + nu) - W(sigma, nu)] without pairing
// points across the poles.  W minus its simple poles is exactly 1/4 - Z, so
// the average is -G_beta[Z(sigma, 1 + nu) - Z(sigma, nu)] plus the Gaussian
// Hilbert transforms of the four poles, -sqrt(2)/beta D(p / (sqrt(2) beta))
// with Dawson's D(x) = int_0^x exp(t^2 - x^2) dt.
Estimate w_bracket_pole_split_oracle(double sigma, double beta, const QuadratureSpec &quad);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

// Sample mean of f(beta X), X ~ N(0, 1), from a Philox stream keyed by
// `seed`.  Samples are processed in fixed chunks whose statistics are merged
// in chunk order, so the result is bit-identical for any thread count.
MonteCarloEstimate mc_gauss_oracle(const RealFunction &f, double beta,
                                   std::uint64_t samples, std::uint64_t seed,
                                   unsigned threads = 0);

} // namespace vacfluct
