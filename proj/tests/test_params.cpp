#include <cmath>

#include <gtest/gtest.h>

#include "vacfluct/errors.hpp"
#include "vacfluct/params.hpp"

using namespace vacfluct;

TEST(Params, DimensionlessFromPhysical) {
  PhysicalConfig c;
  c.distance_z = 1.5;
  c.measure_time_tau = 6.0;
  c.packet_width_b = 0.3;
  const DimensionlessPoint p = derive_dimensionless(c);
  EXPECT_DOUBLE_EQ(p.sigma, 0.5);
  EXPECT_DOUBLE_EQ(p.beta, std::sqrt(2.0) * 0.3 / 6.0);
  EXPECT_FALSE(p.flags.singular_boundary);
  EXPECT_FALSE(p.flags.point_particle);
}

TEST(Params, FlagsAtSingularBoundaryAndZeroWidth) {
  PhysicalConfig c;
  c.distance_z = 2.0;
  c.measure_time_tau = 4.0;
  const DimensionlessPoint p = derive_dimensionless(c);
  EXPECT_TRUE(p.flags.singular_boundary);
  EXPECT_TRUE(p.flags.point_particle);
}

TEST(Params, ValidationNamesTheField) {
  auto field_of = [](PhysicalConfig c) -> std::string {
    try {
      c.validate();
    } catch (const DomainError &e) {
      return e.field();
    }
    return "";
  };
  PhysicalConfig c;
  EXPECT_EQ(field_of(c), "");
  c.distance_z = 0.0;
  EXPECT_EQ(field_of(c), "distance_z");
  c = {};
  c.measure_time_tau = -1.0;
  EXPECT_EQ(field_of(c), "measure_time_tau");
  c = {};
  c.packet_width_b = -0.1;
  EXPECT_EQ(field_of(c), "packet_width_b");
  c = {};
  c.switching_mu = -1.0;
  EXPECT_EQ(field_of(c), "switching_mu");
  c = {};
  c.mass = std::nan("");
  EXPECT_EQ(field_of(c), "mass");
}

TEST(Params, QuadratureSpecValidation) {
  QuadratureSpec q;
  EXPECT_NO_THROW(q.validate());
  EXPECT_THROW(q.with_rel_tol(0.0).validate(), DomainError);
  q.hermite_nodes = 4;
  EXPECT_THROW(q.validate(), DomainError);
  EXPECT_DOUBLE_EQ(QuadratureSpec{}.with_rel_tol(1e-6).rel_tol, 1e-6);
}
