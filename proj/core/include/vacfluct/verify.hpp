#pragma once

#include <string>
#include <vector>

#include "vacfluct/params.hpp"
#include "vacfluct/quadrature.hpp"

// The acceptance suite: every closed form against its oracle, the limits
// against their closed forms, and two audits whose outcome is reported
// rather than asserted.
namespace vacfluct::verify {

struct CriterionResult {
  std::string id;    // "AC-1" ... "AC-10"
  std::string title;
  bool passed = false;
  std::string detail; // worst deviation and where it occurred
  double seconds = 0.0;
};

// coeff_hat on a (sigma, beta) grid next to the late-time estimates
// A = 1/12 and B = 1/6.
struct CoefficientAuditRow {
  double sigma = 0.0;
  double beta = 0.0;
  Estimate a;
  Estimate b;
  double a_rel_dev = 0.0; // (A - 1/12) / (1/12)
  double b_rel_dev = 0.0; // (B - 1/6) / (1/6)
  // B once more, from the pole-split oracle, and its relative gap to b: how
  // far the principal value depends on the way it is taken.
  double b_pole_split = 0.0;
  double b_pv_gap = 0.0;
};

// Plateau/tail decomposition against the brute-force double integral for
// the kernel (T^2 + a^2)^-2, a = 5 tau (1 + 1/mu).
struct SwitchingAuditRow {
  double mu = 0.0;
  double nu = 0.0;
  double decomposition = 0.0;
  double oracle = 0.0;
  double rel_deviation = 0.0;
};

struct LateTimePoint {
  double tau = 0.0;
  double smeared = 0.0;        // closed-form route, packet width b
  double point_particle = 0.0; // b = 0
  double inverse_square = 0.0; // e^2 / (3 pi^2 m^2 tau^2), i.e. A = 1/12
  double smeared_tol_change = 0.0; // relative change when rel_tol is halved
  double point_particle_tol_change = 0.0;
};

// Late-time sweep of the z dispersion at fixed (z, b).  Slopes are
// least-squares fits of log(value) against log(tau) over the last decade.
struct LateTimeAudit {
  double z = 1.0;
  double b = 0.5;
  std::vector<LateTimePoint> points;
  double smeared_slope = 0.0;
  double point_particle_slope = 0.0;
  double smeared_plateau = 0.0;        // value at the largest tau
  double point_particle_plateau = 0.0; // e^2 / (4 pi^2 m^2 z^2)
  double inverse_square_at_end = 0.0;  // e^2 / (3 pi^2 m^2 tau_max^2)
  std::string smeared_regime;          // "inverse-square", "constant" or "mixed"
  std::string point_particle_regime;
};

struct Report {
  std::vector<CriterionResult> criteria;
  std::vector<CoefficientAuditRow> coefficients;
  std::vector<SwitchingAuditRow> switching;
  LateTimeAudit late_time;

  bool all_passed() const;
};

CriterionResult gaussian_identities(const QuadratureSpec &quad);
CriterionResult j_oracle_agreement(const QuadratureSpec &quad);
CriterionResult regularized_matches_ordinary(const QuadratureSpec &quad);
CriterionResult chain_identity(const QuadratureSpec &quad);
CriterionResult point_particle_forms(const QuadratureSpec &quad);
CriterionResult beta_to_zero_limit(const QuadratureSpec &quad);
CriterionResult short_time_law(const QuadratureSpec &quad);
CriterionResult switching_moments(const QuadratureSpec &quad);
CriterionResult plateau_decomposition(const QuadratureSpec &quad,
                                      std::vector<SwitchingAuditRow> *table = nullptr);
CriterionResult coefficient_audit(const QuadratureSpec &quad,
                                  std::vector<CoefficientAuditRow> *table = nullptr,
                                  LateTimeAudit *sweep = nullptr);

// Everything above, in order.
Report run_all(const QuadratureSpec &quad = {});

// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double> &x, const std::vector<double> &y);

// "inverse-square" for slopes within 0.25 of -2, "constant" within 0.25 of 0,
// "mixed" otherwise.
std::string classify_slope(double slope);

} // namespace vacfluct::verify
