#include "vacfluct_cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "vacfluct/errors.hpp"
#include "vacfluct/verify.hpp"
#include "vacfluct_cli/config_file.hpp"
#include "vacfluct_cli/json_io.hpp"

namespace vacfluct::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SweepRow evaluate(const SweepRequest &req, double param) {
  const PhysicalConfig cfg = with_parameter(req.fixed, req.parameter, param);
  const DispersionResult r = dispersion(cfg, req.component, req.quad);
  SweepRow row;
  row.param = param;
  row.value = r.value;
  row.error_estimate = r.error_estimate;
  row.regime = r.regime;
  try {
    row.point_particle_value = point_particle(cfg, req.component).value;
  } catch (const SingularPointError &) {
    row.point_particle_value = kNaN;
  }
  row.late_time_asymptote =
      asymptote(cfg, req.component, AsymptoticRegime::late_time, req.quad).value;
  return row;
}

} // namespace

std::string slope_label(double slope) {
  return std::isnan(slope) ? "undefined" : verify::classify_slope(slope);
}

void SweepRequest::validate() const {
  if (!(range.from < range.to))
    throw UsageError("sweep range needs from < to");
  if (range.points < 2)
    throw UsageError("sweep needs at least 2 points");
  if (range.spacing == Spacing::log && !(range.from > 0.0))
    throw UsageError("log spacing needs from > 0");
  fixed.validate();
  quad.validate();
}

SweepParameter parameter_from_string(const std::string &s) {
  if (s == "tau")
    return SweepParameter::tau;
  if (s == "z")
    return SweepParameter::z;
  if (s == "b")
    return SweepParameter::b;
  if (s == "mu")
    return SweepParameter::mu;
  throw UsageError("unknown sweep parameter '" + s + "' (tau, z, b or mu)");
}

std::string to_string(SweepParameter p) {
  switch (p) {
  case SweepParameter::tau:
    return "tau";
  case SweepParameter::z:
    return "z";
  case SweepParameter::b:
    return "b";
  case SweepParameter::mu:
    return "mu";
  }
  return "?";
}

std::vector<double> sweep_grid(const SweepRange &r) {
  std::vector<double> g(static_cast<std::size_t>(r.points));
  const double last = r.points - 1;
  for (int i = 0; i < r.points; ++i) {
    const double t = i / last;
    g[i] = r.spacing == Spacing::log
               ? std::exp(std::log(r.from) + t * (std::log(r.to) - std::log(r.from)))
               : r.from + t * (r.to - r.from);
  }
  // Hit the end points exactly.
  g.front() = r.from;
  g.back() = r.to;
  return g;
}

PhysicalConfig with_parameter(PhysicalConfig cfg, SweepParameter parameter, double value) {
  switch (parameter) {
  case SweepParameter::tau:
    cfg.measure_time_tau = value;
    break;
  case SweepParameter::z:
    cfg.distance_z = value;
    break;
  case SweepParameter::b:
    cfg.packet_width_b = value;
    break;
  case SweepParameter::mu:
    cfg.switching_mu = value;
    break;
  }
  return cfg;
}

std::vector<SweepRow> run_sweep(const SweepRequest &req) {
  req.validate();
  const std::vector<double> grid = sweep_grid(req.range);
  const std::size_t n = grid.size();
  std::vector<SweepRow> rows(n);
  std::vector<std::exception_ptr> failures(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        rows[i] = evaluate(req, grid[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  unsigned threads =
      req.threads ? req.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }

  for (const auto &f : failures)
    if (f)
      std::rethrow_exception(f);
  return rows;
}

double sweep_slope(const std::vector<SweepRow> &rows) {
  std::vector<double> x, y;
  int sign = 0;
  for (const SweepRow &r : rows) {
    if (!(r.param > 0.0) || !std::isfinite(r.value) || r.value == 0.0)
      continue;
    const int s = r.value > 0.0 ? 1 : -1;
    if (sign != 0 && s != sign)
      return kNaN;
    sign = s;
    x.push_back(r.param);
    y.push_back(r.value);
  }
  if (x.size() < 2)
    return kNaN;
  return verify::log_log_slope(x, y);
}

void write_csv(std::ostream &out, const SweepRequest &req, const std::vector<SweepRow> &rows) {
  const PhysicalConfig &c = req.fixed;
  auto fixed = [&req](SweepParameter p, double v) {
    return p == req.parameter ? std::string("swept") : format12(v);
  };
  out << "# " << version_string() << '\n';
  out << "# vacfluct sweep: component=" << to_string(req.component)
      << " param=" << to_string(req.parameter)
      << " spacing=" << (req.range.spacing == Spacing::log ? "log" : "linear")
      << " points=" << req.range.points << '\n';
  out << "# config: e2=" << format12(c.charge_sq) << " mass=" << format12(c.mass)
      << " z=" << fixed(SweepParameter::z, c.distance_z)
      << " tau=" << fixed(SweepParameter::tau, c.measure_time_tau)
      << " b=" << fixed(SweepParameter::b, c.packet_width_b)
      << " mu=" << fixed(SweepParameter::mu, c.switching_mu) << '\n';
  out << "# quadrature: rel_tol=" << format12(req.quad.rel_tol)
      << " abs_tol=" << format12(req.quad.abs_tol) << '\n';
  if (req.parameter == SweepParameter::mu)
    out << "# note: mu shapes only the switching tails; the measuring-part value does not "
           "depend on it\n";
  out << "param,value,error_estimate,point_particle_value,late_time_asymptote,regime_flags\n";
  for (const SweepRow &r : rows)
    out << format12(r.param) << ',' << format12(r.value) << ',' << format12(r.error_estimate)
        << ',' << format12(r.point_particle_value) << ',' << format12(r.late_time_asymptote)
        << ',' << regime_string(r.regime) << '\n';
  const double slope = sweep_slope(rows);
  out << "# log-log slope d ln|value| / d ln " << to_string(req.parameter) << " = "
      << format12(slope) << " (" << slope_label(slope) << ")\n";
}

nlohmann::json sweep_json(const SweepRequest &req, const std::vector<SweepRow> &rows) {
  nlohmann::json out_rows = nlohmann::json::array();
  for (const SweepRow &r : rows)
    out_rows.push_back({{"param", number(r.param)},
                        {"value", number(r.value)},
                        {"error_estimate", number(r.error_estimate)},
                        {"point_particle_value", number(r.point_particle_value)},
                        {"late_time_asymptote", number(r.late_time_asymptote)},
                        {"regime", r.regime}});
  const double slope = sweep_slope(rows);
  return {{"version", version_string()},
          {"component", std::string(to_string(req.component))},
          {"param", to_string(req.parameter)},
          {"from", number(req.range.from)},
          {"to", number(req.range.to)},
          {"points", req.range.points},
          {"spacing", req.range.spacing == Spacing::log ? "log" : "linear"},
          {"config", req.fixed},
          {"quadrature", req.quad},
          {"rows", std::move(out_rows)},
          {"log_log_slope", number(slope)},
          {"slope_regime", slope_label(slope)}};
}

} // namespace vacfluct::cli
