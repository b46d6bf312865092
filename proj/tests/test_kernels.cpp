#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "vacfluct/errors.hpp"
#include "vacfluct/kernels.hpp"

using namespace vacfluct;
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

TEST(Kernels, ClosedForms) {
  const double z = 0.8, T = 3.1;
  const double d = T * T - 4 * z * z;
  EXPECT_NEAR(kernel_zz(T, z), 1.0 / (kPi2 * d * d), 1e-15);
  EXPECT_NEAR(kernel_xx(T, z), -(T * T + 4 * z * z) / (kPi2 * d * d * d), 1e-15);
}

TEST(Kernels, EvenInT) {
  for (double T : {0.0, 0.3, 1.7, 2.5, 40.0}) {
    EXPECT_EQ(kernel_zz(T, 1.0), kernel_zz(-T, 1.0));
    EXPECT_EQ(kernel_xx(T, 1.0), kernel_xx(-T, 1.0));
  }
}

TEST(Kernels, RefusesTheLightCone) {
  EXPECT_THROW(kernel_zz(2.0, 1.0), SingularPointError);
  EXPECT_THROW(kernel_xx(-2.0, 1.0), SingularPointError);
  EXPECT_NO_THROW(kernel_zz(2.0 + 1e-6, 1.0));
  EXPECT_THROW(kernel_zz(1.0, 0.0), DomainError);
}

TEST(Kernels, ContinuationMatchesOnTheRealAxis) {
  for (double T : {0.4, 1.3, 5.0}) {
    EXPECT_NEAR(kernel_zz(std::complex<double>(T, 0.0), 1.0).real(), kernel_zz(T, 1.0), 1e-15);
    EXPECT_NEAR(kernel_xx(std::complex<double>(T, 0.0), 1.0).real(), kernel_xx(T, 1.0), 1e-15);
  }
}

TEST(Kernels, Handles) {
  const KernelHandle K = make_kernel_zz(0.5);
  EXPECT_TRUE(K.is_singular());
  ASSERT_EQ(K.singular_points.size(), 1u);
  EXPECT_DOUBLE_EQ(K.singular_points[0], 1.0);
  EXPECT_EQ(K.em, EmComponent::zz);
  EXPECT_TRUE(static_cast<bool>(K.continuation));
  EXPECT_DOUBLE_EQ(K(0.3), kernel_zz(0.3, 0.5));

  const KernelHandle G = make_kernel("gauss", [](double T) { return std::exp(-T * T); },
                                     DecayClass::regular_decaying);
  EXPECT_FALSE(G.is_singular());
  EXPECT_FALSE(G.em.has_value());
  EXPECT_DOUBLE_EQ(G(1.0), std::exp(-1.0));
}
