#include "vacfluct/params.hpp"

#include <cmath>
#include <numbers>

#include "vacfluct/errors.hpp"

namespace vacfluct {

void PhysicalConfig::validate() const {
  auto finite_positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!finite_positive(distance_z))
    throw DomainError("distance_z", "distance to the plate must be > 0");
  if (!finite_positive(measure_time_tau))
    throw DomainError("measure_time_tau", "measuring time must be > 0");
  if (!(std::isfinite(packet_width_b) && packet_width_b >= 0.0))
    throw DomainError("packet_width_b", "packet width must be >= 0");
  if (!finite_positive(charge_sq))
    throw DomainError("charge_sq", "e^2 must be > 0");
  if (!finite_positive(mass))
    throw DomainError("mass", "mass must be > 0");
  if (!(std::isfinite(switching_mu) && switching_mu >= 0.0))
    throw DomainError("switching_mu", "switching parameter must be >= 0");
}

DimensionlessPoint derive_dimensionless(const PhysicalConfig &cfg) {
  cfg.validate();
  DimensionlessPoint p;
  p.sigma = 2.0 * cfg.distance_z / cfg.measure_time_tau;
  p.beta = std::numbers::sqrt2 * cfg.packet_width_b / cfg.measure_time_tau;
  p.flags.singular_boundary = (p.sigma == 1.0);
  p.flags.point_particle = (p.beta == 0.0);
  return p;
}

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0))
    throw DomainError("rel_tol", "must be > 0");
  if (!(abs_tol > 0.0))
    throw DomainError("abs_tol", "must be > 0");
  if (max_subdivisions < 1)
    throw DomainError("max_subdivisions", "must be >= 1");
  if (hermite_nodes < 8)
    throw DomainError("hermite_nodes", "must be >= 8");
  if (!(tail_truncation >= 6.0))
    throw DomainError("tail_truncation", "must be >= 6");
  if (!(singularity_exclusion > 0.0))
    throw DomainError("singularity_exclusion", "must be > 0");
}

} // namespace vacfluct
