#pragma once

#include <optional>
#include <string_view>

#include "vacfluct/params.hpp"

namespace vacfluct {

enum class Component { z, x_or_y };

// Two independent evaluation paths of the smeared measuring-part dispersion.
//   closed_form   Gaussian average of the Z / W brackets.
//   raw_integral  Gaussian average of the symmetrised regularised integrals
//                 built directly from J and J~.
enum class Route { closed_form, raw_integral };

struct RegimeFlags {
  bool late_time = false;      // sigma < 1, i.e. tau > 2z
  bool short_time = false;     // sigma > 1
  bool pole_adjacent = false;  // |1 - sigma| < max(0.05, 3 beta)
  bool point_particle = false; // beta == 0
};

struct ValidityReport {
  bool displacement_ok = false; // sqrt(<dv_z^2>) tau < z
  bool spread_ok = false;       // tau < (b / lambda_C) z, lambda_C = 1/m
  bool packet_size_ok = false;  // b >= 10 lambda_C
};

struct DispersionResult {
  double value = 0.0;
  Component component = Component::z;
  RegimeFlags regime;
  double error_estimate = 0.0;
  ValidityReport validity;
  Route route = Route::closed_form;
  double sigma = 0.0;
  double beta = 0.0;
};

DispersionResult dispersion(const PhysicalConfig &cfg, Component component,
                            const QuadratureSpec &quad,
                            Route route = Route::closed_form);

// <dv_z^2>_M = 4 e^2 / (pi^2 m^2 tau^2 sigma^2) G_beta[Z(sigma,1+nu) - Z(sigma,nu)]
DispersionResult dispersion_z(const PhysicalConfig &cfg, const QuadratureSpec &quad,
                              Route route = Route::closed_form);
// <dv_x^2>_M = -2 e^2 / (pi^2 m^2 tau^2 sigma^2) G_beta[W(sigma,1+nu) - W(sigma,nu)]
// (principal value across the poles of W).  The y component is identical.
DispersionResult dispersion_x(const PhysicalConfig &cfg, const QuadratureSpec &quad,
                              Route route = Route::closed_form);

// beta = 0 closed forms.  Throws SingularPointError at sigma == 1.
DispersionResult point_particle(const PhysicalConfig &cfg, Component component);

enum class AsymptoticRegime { late_time, short_time };

struct AsymptoteValue {
  double value = 0.0;
  // coeff_hat for late_time, the coefficient of e^2 tau^2 / (m^2 z^4) for
  // short_time.  A point particle (b = 0) has no coeff_hat; its late-time
  // value is the sigma -> 0 limit, A = 1/(4 sigma^2) and B = 1/6.
  double coefficient = 0.0;
  double error_estimate = 0.0;
  // Late-time value obtained with A = 1/12 (z) or B = 1/6 (x).
  std::optional<double> estimate_value;
};

AsymptoteValue asymptote(const PhysicalConfig &cfg, Component component,
                         AsymptoticRegime regime, const QuadratureSpec &quad);

ValidityReport validity_check(const PhysicalConfig &cfg, const DispersionResult &result);

RegimeFlags classify_regime(double sigma, double beta);

std::string_view to_string(Component c);
std::string_view to_string(Route r);

} // namespace vacfluct
