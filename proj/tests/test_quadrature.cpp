#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "vacfluct/errors.hpp"
#include "vacfluct/quadrature.hpp"

using namespace vacfluct;
using namespace vacfluct::numeric;

TEST(Quadrature, Polynomial) {
  const Estimate e = integrate([](double x) { return x * x * x - 2 * x; }, -1.0, 3.0, {});
  EXPECT_NEAR(e.value, 20.0 - 8.0, 1e-12);
  EXPECT_TRUE(e.converged);
}

TEST(Quadrature, LogarithmicSingularityAtABreak) {
  const std::vector<double> br{0.3};
  const Estimate e =
      integrate([](double x) { return std::log(std::fabs(x - 0.3)); }, 0.0, 1.0, {}, br);
  const double exact = 0.3 * std::log(0.3) - 0.3 + 0.7 * std::log(0.7) - 0.7;
  EXPECT_NEAR(e.value, exact, 1e-10);
}

TEST(Quadrature, SemiInfinite) {
  const Estimate e =
      integrate_to_infinity([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, {});
  EXPECT_NEAR(e.value, std::numbers::pi / 2, 1e-9);
}

TEST(Quadrature, NonConvergenceIsReported) {
  QuadratureSpec q;
  q.max_subdivisions = 3;
  auto f = [](double x) { return std::sin(1.0 / x) / x; };
  EXPECT_FALSE(try_integrate(f, 1e-4, 1.0, q).converged);
  try {
    integrate(f, 1e-4, 1.0, q);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError &e) {
    EXPECT_TRUE(std::isfinite(e.value()));
    EXPECT_GT(e.achieved_error(), 0.0);
  }
}

TEST(GaussHermite, MomentsOfTheStandardNormal) {
  const GaussHermiteRule &r = gauss_hermite(32);
  ASSERT_EQ(r.nodes.size(), 32u);
  double m0 = 0, m2 = 0, m4 = 0, m1 = 0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const double x = r.nodes[i], w = r.weights[i];
    m0 += w;
    m1 += w * x;
    m2 += w * x * x;
    m4 += w * x * x * x * x;
  }
  EXPECT_NEAR(m0, 1.0, 1e-13);
  EXPECT_NEAR(m1, 0.0, 1e-13);
  EXPECT_NEAR(m2, 1.0, 1e-12);
  EXPECT_NEAR(m4, 3.0, 1e-11);
  EXPECT_EQ(&gauss_hermite(32), &r) << "rules are cached";
}
