#pragma once

#include <span>

#include "vacfluct/kernels.hpp"
#include "vacfluct/params.hpp"
#include "vacfluct/quadrature.hpp"

namespace vacfluct {

// How gauss_transform treats the declared singular points of its integrand.
//   split_log        integrable singularities: break the domain there and let
//                    the adaptive rule refine towards them.
//   principal_value  simple poles: integrate g(p + s) + g(p - s) over a
//                    symmetric window so the odd pole part cancels.
//   none             smooth integrand; break points are still honoured.
enum class PoleStrategy { split_log, principal_value, none };

struct GaussianTransformSpec {
  double beta = 0.0; // rms width of the Gaussian in the shift variable
  QuadratureSpec quad{};
  PoleStrategy pole_strategy = PoleStrategy::none;
  double center = 0.0; // its mean
};

// G_beta[f] = 1/(sqrt(2 pi) beta) int exp(-(nu - c)^2 / (2 beta^2)) f(nu) dnu
// with c = spec.center.  Averaging f(c + nu) about 0 is the same integral,
// but centring the weight instead leaves the poles of f where they are,
// which matters when c + p is not representable.
//
// beta == 0 returns f(c) exactly.  With no declared singular points the
// integral is first tried with Gauss-Hermite rules of n and 2n nodes and
// falls back to adaptive integration over +/- tail_truncation * beta when
// the two disagree.  Singular points are given in the nu variable.
Estimate gauss_transform(const RealFunction &f,
                         std::span<const double> singular_points,
                         const GaussianTransformSpec &spec);

inline Estimate gauss_transform(const RealFunction &f,
                                const GaussianTransformSpec &spec) {
  return gauss_transform(f, std::span<const double>{}, spec);
}

// G_beta[f(1 + nu) - f(nu)], taken as the transforms of f centred at
// spec.center + 1 and spec.center.  The singular points are those of f itself,
// so they are not shifted by one and rounded on the way.
Estimate gauss_transform_step(const RealFunction &f,
                              std::span<const double> singular_points,
                              const GaussianTransformSpec &spec);

// Smeared kernel  K^(T, beta) = G_beta[K(T + tau nu)].
//
// The poles of K sit at nu* = (+/-p - T) / tau.  If one of them falls inside
// the Gaussian window and the kernel has an analytic continuation, the
// integral is taken along the shifted line nu + i h (h = beta / 2) and its
// real part returned.  That value is the principal value for simple poles and
// the Hadamard finite part for the double poles of the field correlators.
// Without a continuation the shifted poles are handed to gauss_transform.
Estimate smeared_kernel(const KernelHandle &K, double T, double tau,
                        const GaussianTransformSpec &spec);

} // namespace vacfluct
