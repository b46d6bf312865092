#include <cmath>

#include <gtest/gtest.h>

#include "vacfluct/errors.hpp"
#include "vacfluct/reg_integrals.hpp"

using namespace vacfluct;
using IO = IntegralOrder;

namespace {
void expect_rel(double got, double want, double tol) {
  EXPECT_NEAR(got, want, tol * std::fabs(want)) << "got " << got << " want " << want;
}
} // namespace

// Frozen values from 30-digit quadrature of the vertical-line integral.
TEST(JClosed, FrozenValues) {
  expect_rel(j_closed(1.0, 0, 0.5, IO::quadratic), 0.469442089330447284, 1e-13);
  expect_rel(j_closed(-1.0, 0, 0.5, IO::quadratic), -0.469442089330447284, 1e-13);
  expect_rel(j_closed(0.2, 1, 0.5, IO::cubic), 9.66428602853637457, 1e-12);
  expect_rel(j_closed(1.2, 0, 0.3, IO::cubic), 0.0922834981760072374, 1e-12);
}

TEST(JClosed, ZeroShiftAndPoles) {
  EXPECT_NO_THROW(j_closed(0.0, 0, 0.5, IO::quadratic));
  EXPECT_THROW(j_closed(0.5, 0, 0.5, IO::quadratic), SingularPointError);
  EXPECT_THROW(j_closed(-0.3, 1, 0.3, IO::cubic), SingularPointError);
}

TEST(JClosed, AlphaZeroPartIsOdd) {
  for (double nu : {0.05, 0.4, 1.3, 7.0})
    for (IO o : {IO::quadratic, IO::cubic})
      EXPECT_NEAR(j_closed(-nu, 0, 0.3, o), -j_closed(nu, 0, 0.3, o),
                  1e-14 * std::fabs(j_closed(nu, 0, 0.3, o)));
}

TEST(IReg, EqualsTheOrdinaryIntegralOffPoles) {
  expect_rel(i_reg(1.0, 0, 0.25, IO::quadratic), 0.317662142079916153, 1e-12);
  expect_rel(i_reg(5.0, 1, 0.25, IO::quadratic), -0.00500882457231282466, 1e-11);
  expect_rel(i_reg(1.0, 1, 0.25, IO::cubic), -0.0451530619758746617, 1e-12);
}

TEST(ZW, FrozenValues) {
  expect_rel(z_fn(0.5, 1.0), 0.274653072167027, 1e-14);
  expect_rel(w_fn(0.5, 1.0), 0.0586802611663059, 1e-13);
  EXPECT_EQ(z_fn(0.5, 0.0), 0.0);
  EXPECT_EQ(w_fn(0.5, 0.0), 0.0);
}

TEST(ZW, EvenInNuAndSigma) {
  for (double nu : {0.1, 0.9, 2.4})
    for (double s : {0.2, 0.7}) {
      EXPECT_EQ(z_fn(s, nu), z_fn(s, -nu));
      EXPECT_EQ(z_fn(s, nu), z_fn(-s, nu));
      EXPECT_EQ(w_fn(s, nu), w_fn(s, -nu));
      EXPECT_EQ(w_fn(s, nu), w_fn(-s, nu));
    }
  EXPECT_THROW(z_fn(0.0, 1.0), DomainError);
  EXPECT_THROW(w_fn(0.4, 0.4), SingularPointError);
}

TEST(ZW, ExcessIsAccurateForSmallSigma) {
  // Z - 1/4 = sigma^2 / (12 nu^2) + O(sigma^4)
  const double s = 1e-6, nu = 1.0;
  expect_rel(z_excess(s, nu), s * s / 12.0, 1e-6);
  expect_rel(z_excess(0.3, 1.1), z_fn(0.3, 1.1) - 0.25, 1e-12);
}

TEST(ZW, Brackets) {
  EXPECT_DOUBLE_EQ(z_bracket(0.4, 0.2), z_fn(0.4, 1.2) - z_fn(0.4, 0.2));
  EXPECT_DOUBLE_EQ(w_bracket(0.4, 0.2), w_fn(0.4, 1.2) - w_fn(0.4, 0.2));
}

TEST(ChainIdentity, SymmetrisedRawChainMatchesBrackets) {
  for (double s : {0.1, 0.3, 0.7, 1.5})
    for (double nu : {-1.7, 0.05, 0.2, 1.2, 3.3}) {
      if (std::fabs(nu + 1) == s || std::fabs(nu - 1) == s)
        continue;
      const double s2 = s * s;
      const double lhs_z = symmetrize([&](double u) { return big_i(u, s, false); }, nu);
      const double rhs_z =
          2.0 / s2 * (0.5 * (z_fn(s, 1 + nu) + z_fn(s, 1 - nu)) - z_fn(s, nu));
      expect_rel(lhs_z, rhs_z, 1e-10);
      const double lhs_w = symmetrize([&](double u) { return big_i(u, s, true); }, nu);
      const double rhs_w = 1.0 / s2 * (0.5 * (w_fn(s, 1 + nu) + w_fn(s, 1 - nu)) - w_fn(s, nu));
      expect_rel(lhs_w, rhs_w, 1e-8);
    }
}

TEST(ChainIdentity, ExtendedPrecisionAgrees) {
  for (double nu : {0.05, 0.8, 2.2})
    expect_rel(static_cast<double>(big_i_extended(nu, 0.3L, true)), big_i(nu, 0.3, true), 1e-10);
}

TEST(CoeffHat, ReferencesAndPositivity) {
  const QuadratureSpec q;
  expect_rel(coeff_hat(0.5, 0.2, Coefficient::A, q).value, 0.926559978581378574, 1e-9);
  expect_rel(coeff_hat(0.5, 0.2, Coefficient::B, q).value, 0.785679515315376731, 1e-9);
  expect_rel(coeff_hat(0.1, 0.05, Coefficient::A, q).value, 17.0846319904675685, 1e-9);
  expect_rel(coeff_hat(0.1, 0.05, Coefficient::B, q).value, 15.1692614380294104, 1e-9);
  for (double s : {0.01, 0.05, 0.1})
    for (double b : {0.01, 0.05, 0.1}) {
      EXPECT_GT(coeff_hat(s, b, Coefficient::A, q).value, 0.0) << s << ' ' << b;
      EXPECT_GT(coeff_hat(s, b, Coefficient::B, q).value, 0.0) << s << ' ' << b;
    }
}
