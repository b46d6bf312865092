#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "vacfluct/errors.hpp"
#include "vacfluct/oracle.hpp"
#include "vacfluct/switching.hpp"

using namespace vacfluct;
constexpr double kPi = std::numbers::pi;

TEST(LorentzPlateau, Shape) {
  const LorentzPlateau F{2.0, 0.1};
  EXPECT_EQ(lorentz_plateau_eval(F, 0.0), 1.0);
  EXPECT_EQ(lorentz_plateau_eval(F, 1.0), 1.0);
  // one tail duration past the edge: mu^2 / (mu^2 + mu^2)
  EXPECT_NEAR(lorentz_plateau_eval(F, 1.0 + 0.1 * 2.0), 0.5, 1e-15);
  EXPECT_EQ(lorentz_plateau_eval(F, -1.3), lorentz_plateau_eval(F, 1.3));
  EXPECT_EQ(lorentz_plateau_eval(LorentzPlateau{2.0, 0.0}, 1.01), 0.0);
  EXPECT_THROW((LorentzPlateau{-1.0, 0.1}.validate()), DomainError);
  EXPECT_DOUBLE_EQ(F.tail_time(), kPi * 0.1 * 2.0);
}

TEST(LorentzPlateau, Moments) {
  for (double mu : {0.01, 0.1, 1.0}) {
    const LorentzPlateau F{3.0, mu};
    const PlateauMoments m = plateau_moments(F, {});
    EXPECT_DOUBLE_EQ(m.plateau_area, 3.0);
    EXPECT_NEAR(m.tail_area.value, kPi * mu * 3.0, 1e-6 * kPi * mu * 3.0);
  }
}

TEST(FCal, ValuesAndLimits) {
  EXPECT_NEAR(f_cal(1.0), 0.489689094606, 1e-11);
  EXPECT_NEAR(f_cal(1e-6), 0.0, 1e-5);
  EXPECT_NEAR(f_cal(1e8), kPi / 2, 1e-5);
  EXPECT_EQ(f_cal_at_zero(), 0.0);
  EXPECT_EQ(f_cal_at_infinity(), kPi / 2);
  EXPECT_THROW(f_cal(0.0), DomainError);
  double prev = 0.0;
  for (double chi : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    EXPECT_GT(f_cal(chi), prev);
    prev = f_cal(chi);
  }
}

TEST(MeasuringIntegral, MatchesTheStepSwitchingOracle) {
  const KernelHandle K = make_kernel("lorentz", [](double T) { return 1.0 / (1.0 + T * T); },
                                     DecayClass::regular_decaying);
  for (double nu : {0.0, 0.3, 2.0}) {
    const double m = measuring_integral(K, 1.5, nu, {}).value;
    const double o = double_integral_oracle(K, LorentzPlateau{1.5, 0.0}, nu, {}).value;
    EXPECT_NEAR(m, o, 1e-8 * std::fabs(o)) << "nu=" << nu;
  }
}

TEST(MeasuringIntegral, ConstantKernel) {
  const KernelHandle one =
      make_kernel("one", [](double) { return 1.0; }, DecayClass::non_decaying);
  EXPECT_NEAR(measuring_integral(one, 2.0, 0.0, {}).value, 4.0, 1e-12);
}

TEST(MeasuringIntegral, RegularisedRouteOnAPoleFreeWindow) {
  const KernelHandle K = make_kernel_zz(1.0);
  const double direct = measuring_integral(K, 0.5, 0.3, {}, MeasuringRoute::direct).value;
  const double reg = measuring_integral(K, 0.5, 0.3, {}, MeasuringRoute::regularized).value;
  EXPECT_NEAR(reg, direct, 1e-9 * std::fabs(direct));
  EXPECT_THROW(measuring_integral(K, 4.0, 0.0, {}, MeasuringRoute::direct), SingularPointError);
}

TEST(FullIntegral, NonDecayingKernelIsRefused) {
  const KernelHandle one =
      make_kernel("one", [](double) { return 1.0; }, DecayClass::non_decaying);
  EXPECT_THROW(full_integral(one, LorentzPlateau{1.0, 0.1}, 0.0, {}), DomainError);
}

// The constant kernel exposes the plateau-tail cross term 2 pi mu tau^2 that
// the decomposition leaves out.
TEST(FullIntegral, ConstantKernelMissesTheCrossTerm) {
  const KernelHandle one =
      make_kernel("one", [](double) { return 1.0; }, DecayClass::non_decaying);
  const double tau = 2.0, mu = 0.1;
  const FullIntegralTerms t =
      full_integral(one, LorentzPlateau{tau, mu}, 0.0, {}, FullIntegralOptions{true});
  const double exact = tau * tau * (1 + kPi * mu) * (1 + kPi * mu);
  EXPECT_NEAR(t.total.value, tau * tau * (1 + kPi * kPi * mu * mu), 1e-8);
  EXPECT_NEAR(exact - t.total.value, 2 * kPi * mu * tau * tau, 1e-8);
}

namespace {
// (T^2 + a^2)^-2 times a^4, so that values are O(1) and sit well above the
// default absolute tolerance.
KernelHandle quartic(double a, double scale) {
  return make_kernel(
      "quartic",
      [a, scale](double T) {
        const double r = a * a / (T * T + a * a);
        return scale * r * r;
      },
      DecayClass::inverse_quartic);
}
} // namespace

TEST(FullIntegral, DecayingKernelAgreesWithTheDoubleIntegral) {
  const double tau = 1.0;
  for (double mu : {0.1, 1e-3, 1e-5}) {
    const KernelHandle K = quartic(5 * tau * (1 + 1 / mu), 1.0);
    const LorentzPlateau F{tau, mu};
    const FullIntegralTerms t = full_integral(K, F, 0.0, {});
    const double o = double_integral_oracle(K, F, 0.0, {}).value;
    EXPECT_NEAR(t.total.value, o, 1e-9 * o) << "mu=" << mu;
    EXPECT_NEAR(t.total.value, t.measuring.value + t.tail.value + t.cross.value, 1e-14);
    // the cross term is what carries the tails at small mu
    EXPECT_NEAR(t.cross.value, 2 * kPi * mu, 0.01 * 2 * kPi * mu) << "mu=" << mu;
  }
}

// Tolerances are absolute as well as relative: a kernel of size 1e-15 needs
// an abs_tol to match.
TEST(FullIntegral, TinyKernelNeedsASmallAbsoluteTolerance) {
  const double tau = 1.0, mu = 1e-3, a = 5 * tau * (1 + 1 / mu);
  const double scale = 1.0 / (a * a * a * a);
  const KernelHandle K = quartic(a, scale);
  QuadratureSpec q;
  q.abs_tol = 1e-40;
  const LorentzPlateau F{tau, mu};
  const double tiny = full_integral(K, F, 0.0, q).total.value;
  const double unit = full_integral(quartic(a, 1.0), F, 0.0, {}).total.value;
  EXPECT_NEAR(tiny / scale, unit, 1e-9 * unit);
  // with the default floor the cross term drowns
  EXPECT_GT(std::fabs(full_integral(K, F, 0.0, {}).total.value / scale - unit), 1e-3);
}
