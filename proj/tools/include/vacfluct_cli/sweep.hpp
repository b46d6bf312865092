#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "vacfluct/dispersion.hpp"
#include "vacfluct/params.hpp"

namespace vacfluct::cli {

enum class SweepParameter { tau, z, b, mu };
enum class Spacing { linear, log };
enum class OutputFormat { csv, json };

struct SweepRange {
  double from = 0.0;
  double to = 0.0;
  int points = 0;
  Spacing spacing = Spacing::linear;
};

struct SweepRequest {
  Component component = Component::z;
  SweepParameter parameter = SweepParameter::tau;
  SweepRange range;
  PhysicalConfig fixed;
  QuadratureSpec quad;
  OutputFormat format = OutputFormat::csv;
  unsigned threads = 0; // 0: one per hardware thread

  // Throws UsageError: from >= to, points < 2, log spacing from <= 0.
  void validate() const;
};

struct SweepRow {
  double param = 0.0;
  double value = 0.0;
  double error_estimate = 0.0;
  double point_particle_value = 0.0; // NaN where sigma == 1
  double late_time_asymptote = 0.0;
  RegimeFlags regime;
};

SweepParameter parameter_from_string(const std::string &s);
std::string to_string(SweepParameter p);

std::vector<double> sweep_grid(const SweepRange &r);

// The fixed config with `parameter` set to `value`.
PhysicalConfig with_parameter(PhysicalConfig cfg, SweepParameter parameter, double value);

// One row per grid point, in grid order whatever the thread count.  A failing
// point rethrows its exception (the lowest-index one if several fail).
std::vector<SweepRow> run_sweep(const SweepRequest &req);

// Least-squares slope of ln|value| against ln(param).  NaN when fewer than
// two rows qualify (param > 0, value of one sign and non-zero).
double sweep_slope(const std::vector<SweepRow> &rows);

// classify_slope, or "undefined" for NaN.
std::string slope_label(double slope);

void write_csv(std::ostream &out, const SweepRequest &req, const std::vector<SweepRow> &rows);
nlohmann::json sweep_json(const SweepRequest &req, const std::vector<SweepRow> &rows);

} // namespace vacfluct::cli
