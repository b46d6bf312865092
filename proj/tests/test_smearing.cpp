#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "vacfluct/errors.hpp"
#include "vacfluct/reg_integrals.hpp"
#include "vacfluct/smearing.hpp"

using namespace vacfluct;

namespace {
GaussianTransformSpec spec(double beta, PoleStrategy s = PoleStrategy::none, double c = 0.0) {
  return {beta, QuadratureSpec{}, s, c};
}
} // namespace

TEST(GaussTransform, Identities) {
  for (double beta : {0.01, 0.1, 0.5}) {
    EXPECT_NEAR(gauss_transform([](double) { return 1.0; }, spec(beta)).value, 1.0, 1e-12);
    EXPECT_NEAR(gauss_transform([](double v) { return v * v; }, spec(beta)).value, beta * beta,
                1e-10);
    EXPECT_NEAR(gauss_transform([](double v) { return std::cos(v); }, spec(beta)).value,
                std::exp(-beta * beta / 2), 1e-8);
  }
}

TEST(GaussTransform, ZeroWidthSamplesTheCentre) {
  auto f = [](double v) { return std::exp(v) + v; };
  EXPECT_EQ(gauss_transform(f, spec(0.0)).value, f(0.0));
  EXPECT_EQ(gauss_transform(f, spec(0.0, PoleStrategy::none, 0.7)).value, f(0.7));
}

TEST(GaussTransform, Linearity) {
  auto f = [](double v) { return std::sin(3 * v) + v * v; };
  auto g = [](double v) { return std::exp(-v); };
  const double a = 2.5, b = -0.75;
  const double lhs = gauss_transform([&](double v) { return a * f(v) + b * g(v); }, spec(0.3)).value;
  const double rhs =
      a * gauss_transform(f, spec(0.3)).value + b * gauss_transform(g, spec(0.3)).value;
  EXPECT_NEAR(lhs, rhs, 1e-12);
}

TEST(GaussTransform, CentreShiftsTheMean) {
  // E[X] = c, E[X^2] = c^2 + beta^2
  const double c = 1.3, beta = 0.2;
  EXPECT_NEAR(gauss_transform([](double v) { return v; }, spec(beta, PoleStrategy::none, c)).value,
              c, 1e-12);
  EXPECT_NEAR(
      gauss_transform([](double v) { return v * v; }, spec(beta, PoleStrategy::none, c)).value,
      c * c + beta * beta, 1e-11);
}

TEST(GaussTransform, ContinuousInBeta) {
  auto f = [](double v) { return 1.0 / (1.0 + v * v); };
  const double at0 = gauss_transform(f, spec(0.0)).value;
  double prev = 1.0;
  for (double beta : {0.1, 0.03, 0.01, 0.003}) {
    const double gap = std::fabs(gauss_transform(f, spec(beta)).value - at0);
    EXPECT_LT(gap, prev);
    prev = gap;
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(GaussTransform, PrincipalValueOfAnOddPole) {
  // 1/v is odd: its principal-value average about 0 vanishes.
  const std::vector<double> poles{0.0};
  const Estimate e = gauss_transform([](double v) { return 1.0 / v + 1.0; }, poles,
                                     spec(0.4, PoleStrategy::principal_value));
  EXPECT_NEAR(e.value, 1.0, 1e-10);
}

TEST(GaussTransform, StepMatchesTheDirectDifference) {
  auto f = [](double v) { return std::cos(2 * v) + 0.3 * v * v; };
  const double beta = 0.25;
  const double step = gauss_transform_step(f, {}, spec(beta)).value;
  const double direct =
      gauss_transform([&](double v) { return f(1.0 + v) - f(v); }, spec(beta)).value;
  EXPECT_NEAR(step, direct, 1e-12);
}

// 30-digit references.  W minus its simple poles is exactly 1/4 - Z, so the
// W average is minus the Z average plus four Gaussian Hilbert transforms,
// -sqrt(2)/beta D(p / (sqrt(2) beta)) with D the Dawson function.
TEST(GaussTransform, BracketReferences) {
  struct Case {
    double sigma, beta, z_bracket, w_bracket;
  };
  for (const Case &c : {Case{0.5, 0.2, 0.231639994645344643, 0.196419878828844183},
                        Case{0.1, 0.05, 0.170846319904675685, 0.151692614380294104},
                        Case{0.3, 0.1, 0.225459273746249772, 0.0951356217445582742}}) {
    const double s = c.sigma;
    const std::vector<double> zp{-s, 0.0, s}, wp{-s, s};
    const double gz = gauss_transform_step([s](double v) { return z_fn(s, v); }, zp,
                                           spec(c.beta, PoleStrategy::split_log))
                          .value;
    const double gw = gauss_transform_step([s](double v) { return w_fn(s, v); }, wp,
                                           spec(c.beta, PoleStrategy::principal_value))
                          .value;
    EXPECT_NEAR(gz, c.z_bracket, 1e-9 * c.z_bracket) << "sigma=" << s;
    EXPECT_NEAR(gw, c.w_bracket, 1e-9 * c.w_bracket) << "sigma=" << s;
  }
}

TEST(SmearedKernel, RegularKernelIsAPlainAverage) {
  const KernelHandle K = make_kernel("lorentz", [](double T) { return 1.0 / (1.0 + T * T); },
                                     DecayClass::regular_decaying);
  const double T = 0.4, tau = 2.0, beta = 0.15;
  const double smeared = smeared_kernel(K, T, tau, spec(beta)).value;
  const double direct =
      gauss_transform([&](double v) { return K(T + tau * v); }, spec(beta)).value;
  EXPECT_NEAR(smeared, direct, 1e-12);
}

TEST(SmearedKernel, PoleInsideTheWindowIsFinite) {
  const KernelHandle K = make_kernel_zz(1.0);
  const Estimate e = smeared_kernel(K, 2.0, 1.0, spec(0.1));
  EXPECT_TRUE(std::isfinite(e.value));
  // Even in T like the kernel itself.
  EXPECT_NEAR(smeared_kernel(K, -2.0, 1.0, spec(0.1)).value, e.value, 1e-9 * std::fabs(e.value));
}
