#pragma once

// Physical and reduced parameters.  Natural units c = hbar = 1 throughout;
// the charge only ever enters as e^2.

namespace vacfluct {

inline constexpr double kFineStructure = 1.0 / 137.0;

struct PhysicalConfig {
  double charge_sq = kFineStructure; // e^2
  double mass = 1.0;                 // m, inverse length
  double distance_z = 1.0;           // distance from the plate
  double measure_time_tau = 1.0;     // plateau duration tau
  double packet_width_b = 0.0;       // temporal rms width of the wave packet
  double switching_mu = 0.0;         // relative switching-tail duration

  // Throws DomainError naming the first offending field.
  void validate() const;
};

struct DimensionlessFlags {
  bool singular_boundary = false; // sigma == 1: tau equals the light round trip 2z
  bool point_particle = false;    // beta == 0
};

// sigma = 2z/tau and beta = sqrt(2) b / tau.  The remaining members are
// evaluation points (shift nu, xi = T/tau, eta = T~/tau, chi, lambda = nu/mu)
// and start at zero.
struct DimensionlessPoint {
  double sigma = 0.0;
  double beta = 0.0;
  double nu = 0.0;
  double xi = 0.0;
  double eta = 0.0;
  double chi = 0.0;
  double lambda_ = 0.0;
  DimensionlessFlags flags;
};

DimensionlessPoint derive_dimensionless(const PhysicalConfig &cfg);

// Tolerances and node counts shared by every numerical integral.
struct QuadratureSpec {
  double rel_tol = 1e-11;
  double abs_tol = 1e-14;
  int max_subdivisions = 20000;
  int hermite_nodes = 64;
  // Gaussian integrals are truncated at +/- tail_truncation * beta.
  double tail_truncation = 10.0;
  // Relative half-width of the band around a singular point inside which
  // pointwise evaluation is refused or skipped.
  double singularity_exclusion = 1e-12;

  void validate() const;

  QuadratureSpec with_rel_tol(double tol) const {
    QuadratureSpec copy = *this;
    copy.rel_tol = tol;
    return copy;
  }
};

} // namespace vacfluct
