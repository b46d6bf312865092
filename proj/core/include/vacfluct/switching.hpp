#pragma once

#include "vacfluct/kernels.hpp"
#include "vacfluct/params.hpp"
#include "vacfluct/quadrature.hpp"

namespace vacfluct {

// Unit plateau of duration tau glued to two Lorentzian tails:
//   F(t) = 1                                  |t| <= tau/2
//        = mu^2 / ((|t|/tau - 1/2)^2 + mu^2)  otherwise.
// mu == 0 is the sudden (step) switching.
struct LorentzPlateau {
  double tau = 1.0;
  double mu = 0.0;

  void validate() const;
  double plateau_time() const { return tau; }               // tau_1
  double tail_time() const;                                  // tau_2 = pi mu tau
};

double lorentz_plateau_eval(const LorentzPlateau &F, double t);

struct PlateauMoments {
  double plateau_area = 0.0; // int_{|t|<=tau/2} F dt, exactly tau
  Estimate tail_area;        // 2 int_{tau/2}^inf F dt by quadrature
};
PlateauMoments plateau_moments(const LorentzPlateau &F, const QuadratureSpec &quad);

// Tail weight of the plateau/tail decomposition,
//   (1 - 1/(chi^2 + 4)) atan(chi) - ln(1 + chi^2) / (chi (chi^2 + 4)),
// increasing from 0 (chi -> 0+) to pi/2 (chi -> inf).  chi <= 0 throws.
double f_cal(double chi);
inline double f_cal_at_zero() { return 0.0; }
double f_cal_at_infinity();

// Which way measuring_integral may take across kernel poles.
//   direct       ordinary quadrature; refuses windows that contain a pole.
//   regularized  closed form through the regularised integral family
//                (electromagnetic kernels only).
enum class MeasuringRoute { direct, regularized };

// 2 tau^2 int_0^1 (1 - xi) {K(tau (xi + nu))}_sym(nu) dxi
Estimate measuring_integral(const KernelHandle &K, double tau, double nu,
                            const QuadratureSpec &quad,
                            MeasuringRoute route = MeasuringRoute::direct);

// The shifted double integral with a Lorentz-plateau switching, split into
// the measuring part and the two tail contributions.
struct FullIntegralTerms {
  Estimate measuring; // both times on the plateau
  Estimate tail;      // 4 pi mu^2 tau^2 int dchi {K}_sym / (chi^2 + 4)
  Estimate cross;     // 4 mu^2 tau^2 int dchi [{K}_sym - {K shifted by tau}_sym] F(chi)
  Estimate total;
};

struct FullIntegralOptions {
  // The decomposition drops the plateau-tail cross term 2 pi mu tau^2 that a
  // constant kernel exposes; non-decaying kernels are refused unless a caller
  // asks for the raw terms explicitly.
  bool allow_non_decaying = false;
};

FullIntegralTerms full_integral(const KernelHandle &K, const LorentzPlateau &F,
                                double nu, const QuadratureSpec &quad,
                                FullIntegralOptions options = {});

} // namespace vacfluct
