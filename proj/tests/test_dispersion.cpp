#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "vacfluct/dispersion.hpp"
#include "vacfluct/errors.hpp"
#include "vacfluct/reg_integrals.hpp"

using namespace vacfluct;
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

namespace {
PhysicalConfig cfg(double z, double tau, double b) {
  PhysicalConfig c;
  c.distance_z = z;
  c.measure_time_tau = tau;
  c.packet_width_b = b;
  return c;
}
} // namespace

TEST(PointParticle, ClosedForms) {
  const PhysicalConfig c = cfg(1.0, 4.0, 0.0); // sigma = 1/2
  const double e2 = c.charge_sq;
  const double pre = e2 / (kPi2 * 16.0 * 0.25);
  EXPECT_NEAR(point_particle(c, Component::z).value, 4 * pre * z_fn(0.5, 1.0), 1e-16);
  EXPECT_NEAR(point_particle(c, Component::x_or_y).value, -2 * pre * w_fn(0.5, 1.0), 1e-16);
  EXPECT_THROW(point_particle(cfg(1.0, 2.0, 0.0), Component::z), SingularPointError);
}

TEST(PointParticle, ZeroWidthDispersionIsThePointParticle) {
  const PhysicalConfig c = cfg(1.0, 4.0, 0.0);
  for (Component k : {Component::z, Component::x_or_y})
    EXPECT_NEAR(dispersion(c, k, {}).value, point_particle(c, k).value,
                1e-12 * std::fabs(point_particle(c, k).value));
}

TEST(Dispersion, RoutesAgree) {
  for (auto [z, tau, b] : {std::tuple{1.0, 100.0, 0.5}, std::tuple{1.0, 3.0, 0.4},
                           std::tuple{0.5, 0.4, 0.05}}) {
    const PhysicalConfig c = cfg(z, tau, b);
    for (Component k : {Component::z, Component::x_or_y}) {
      const double closed = dispersion(c, k, {}, Route::closed_form).value;
      const double raw = dispersion(c, k, {}, Route::raw_integral).value;
      EXPECT_NEAR(raw, closed, 1e-6 * std::fabs(closed)) << "tau=" << tau;
    }
  }
}

TEST(Dispersion, ZIsPositiveInTheLateRegime) {
  for (double sigma : {0.05, 0.2, 0.5})
    for (double beta : {0.01, 0.1, 0.5}) {
      const double tau = 2.0 / sigma;
      const PhysicalConfig c = cfg(1.0, tau, beta * tau / std::sqrt(2.0));
      EXPECT_GT(dispersion_z(c, {}).value, 0.0) << sigma << ' ' << beta;
    }
}

TEST(Dispersion, ResultCarriesDimensionlessPoint) {
  const DispersionResult r = dispersion_x(cfg(1.0, 10.0, 0.5), {});
  EXPECT_DOUBLE_EQ(r.sigma, 0.2);
  EXPECT_DOUBLE_EQ(r.beta, std::sqrt(2.0) * 0.05);
  EXPECT_EQ(r.component, Component::x_or_y);
  EXPECT_TRUE(r.regime.late_time);
  EXPECT_FALSE(r.regime.point_particle);
  EXPECT_GE(r.error_estimate, 0.0);
}

TEST(Regime, Classification) {
  EXPECT_TRUE(classify_regime(0.5, 0.0).late_time);
  EXPECT_TRUE(classify_regime(0.5, 0.0).point_particle);
  EXPECT_TRUE(classify_regime(2.0, 0.1).short_time);
  EXPECT_TRUE(classify_regime(0.97, 0.0).pole_adjacent);
  EXPECT_TRUE(classify_regime(0.8, 0.1).pole_adjacent); // 3 beta = 0.3
  EXPECT_FALSE(classify_regime(0.8, 0.01).pole_adjacent);
}

TEST(Asymptote, LateTimeUsesCoeffHat) {
  const PhysicalConfig c = cfg(1.0, 20.0, 1.0);
  const AsymptoteValue a = asymptote(c, Component::z, AsymptoticRegime::late_time, {});
  const DimensionlessPoint p = derive_dimensionless(c);
  EXPECT_NEAR(a.coefficient, coeff_hat(p.sigma, p.beta, Coefficient::A, {}).value, 1e-12);
  ASSERT_TRUE(a.estimate_value.has_value());
  EXPECT_GT(*a.estimate_value, 0.0);
}

TEST(Asymptote, PointParticleLateTimeLimits) {
  const PhysicalConfig c = cfg(1.0, 400.0, 0.0); // sigma = 0.005
  const AsymptoteValue z = asymptote(c, Component::z, AsymptoticRegime::late_time, {});
  const AsymptoteValue x = asymptote(c, Component::x_or_y, AsymptoticRegime::late_time, {});
  EXPECT_DOUBLE_EQ(z.coefficient, 0.25 / (0.005 * 0.005));
  EXPECT_DOUBLE_EQ(x.coefficient, 1.0 / 6.0);
  const double e2 = c.charge_sq;
  EXPECT_NEAR(z.value, e2 / (4 * kPi2), 1e-15);
  EXPECT_NEAR(x.value, -e2 / (3 * kPi2 * 400.0 * 400.0), 1e-20);
  EXPECT_NEAR(point_particle(c, Component::z).value, z.value, 1e-3 * z.value);
}

TEST(Asymptote, ShortTimeLaw) {
  const PhysicalConfig c = cfg(1.0, 0.005, 0.0);
  const AsymptoteValue a = asymptote(c, Component::z, AsymptoticRegime::short_time, {});
  EXPECT_NEAR(a.value, c.charge_sq * 0.005 * 0.005 / (16 * kPi2), 1e-3 * a.value);
  EXPECT_NEAR(point_particle(c, Component::z).value, a.value, 1e-2 * a.value);
}

TEST(Validity, Flags) {
  PhysicalConfig c = cfg(1e4, 10.0, 20.0);
  const ValidityReport v = validity_check(c, dispersion_z(c, {}));
  EXPECT_TRUE(v.packet_size_ok);
  EXPECT_TRUE(v.spread_ok);
  EXPECT_TRUE(v.displacement_ok);
  c.packet_width_b = 1.0;
  EXPECT_FALSE(validity_check(c, dispersion_z(c, {})).packet_size_ok);
}

TEST(Names, ToString) {
  EXPECT_EQ(to_string(Component::z), "z");
  EXPECT_EQ(to_string(Route::raw_integral), "raw_integral");
}
