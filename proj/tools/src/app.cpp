#include "vacfluct_cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "vacfluct/dispersion.hpp"
#include "vacfluct/errors.hpp"
#include "vacfluct/switching.hpp"
#include "vacfluct/verify.hpp"
#include "vacfluct_cli/config_file.hpp"
#include "vacfluct_cli/json_io.hpp"
#include "vacfluct_cli/sweep.hpp"

namespace vacfluct::cli {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string line(const char *fmt, ...) {
  va_list ap, again;
  va_start(ap, fmt);
  va_copy(again, ap);
  const int n = std::vsnprintf(nullptr, 0, fmt, ap);
  va_end(ap);
  std::string s(static_cast<std::size_t>(std::max(n, 0)) + 1, '\0');
  std::vsnprintf(s.data(), s.size(), fmt, again);
  va_end(again);
  s.back() = '\n';
  return s;
}

// %s-ready 12-digit number.
struct N {
  explicit N(double x) : text(format12(x)) {}
  const char *c_str() const { return text.c_str(); }
  std::string text;
};

void add_physics_flags(CLI::App *sub, Overrides &o) {
  sub->add_option("--e2", o.e2, "squared charge e^2 (default 1/137)");
  sub->add_option("--mass", o.mass, "particle mass m (default 1)");
  sub->add_option("--z", o.z, "distance from the plate");
  sub->add_option("--tau", o.tau, "measuring time tau");
  sub->add_option("--b", o.b, "wave-packet width b (0: point particle)");
  sub->add_option("--mu", o.mu, "relative switching-tail duration");
  sub->add_option("--rel-tol", o.rel_tol, "quadrature relative tolerance");
  sub->add_option("--abs-tol", o.abs_tol, "quadrature absolute tolerance");
}

void add_component_flag(CLI::App *sub, std::string &component) {
  sub->add_option("--component", component, "z, x or y")
      ->check(CLI::IsMember({"z", "x", "y"}));
}

struct Error {
  std::string kind;
  std::string message;
  int code;
  json extra = json::object();
};

// ---- dispersion -----------------------------------------------------------

json dispersion_report(const Settings &s, Component component) {
  const DispersionResult closed = dispersion(s.physical, component, s.quad);
  json routes;
  routes["closed_form"] = {{"value", number(closed.value)},
                           {"error_estimate", number(closed.error_estimate)}};
  std::optional<double> raw_value;
  try {
    const DispersionResult raw =
        dispersion(s.physical, component, s.quad, Route::raw_integral);
    raw_value = raw.value;
    routes["raw_integral"] = {{"value", number(raw.value)},
                              {"error_estimate", number(raw.error_estimate)}};
  } catch (const QuadratureError &e) {
    routes["raw_integral"] = {{"error", e.what()}};
  }
  double gap = kNaN;
  if (raw_value)
    gap = std::fabs(*raw_value - closed.value) / std::max(std::fabs(closed.value), 1e-300);

  double point = kNaN;
  try {
    point = point_particle(s.physical, component).value;
  } catch (const SingularPointError &) {
  }
  return {{"result", closed},
          {"routes", routes},
          {"route_rel_difference", number(gap)},
          {"point_particle_value", number(point)},
          {"config", s.physical},
          {"quadrature", s.quad}};
}

// ---- verify ---------------------------------------------------------------

std::string verify_text(const verify::Report &r) {
  std::string t;
  for (const verify::CriterionResult &c : r.criteria) {
    t += line("%-6s %-4s %7.2fs  %s", c.id.c_str(), c.passed ? "PASS" : "FAIL", c.seconds,
              c.title.c_str());
    t += line("       %s", c.detail.c_str());
  }

  t += "\ncoefficient audit: A against 1/12, B against 1/6\n";
  t += line("%-8s %-8s %-20s %-14s %-20s %-14s %s", "sigma", "beta", "A", "(A-1/12)/(1/12)", "B",
            "(B-1/6)/(1/6)", "B pole-split gap");
  for (const verify::CoefficientAuditRow &w : r.coefficients)
    t += line("%-8s %-8s %-20s %-14.4g %-20s %-14.4g %.2e", N(w.sigma).c_str(),
              N(w.beta).c_str(), N(w.a.value).c_str(), w.a_rel_dev, N(w.b.value).c_str(),
              w.b_rel_dev, w.b_pv_gap);

  t += "\nplateau/tail decomposition against the double-integral oracle\n";
  t += line("%-6s %-6s %-20s %-20s %s", "mu", "nu", "decomposition", "oracle", "rel. deviation");
  for (const verify::SwitchingAuditRow &w : r.switching)
    t += line("%-6s %-6s %-20s %-20s %.3e", N(w.mu).c_str(), N(w.nu).c_str(),
              N(w.decomposition).c_str(), N(w.oracle).c_str(), w.rel_deviation);

  const verify::LateTimeAudit &a = r.late_time;
  t += line("\nlate-time sweep at z=%s, b=%s", N(a.z).c_str(), N(a.b).c_str());
  t += line("%-16s %-20s %-20s %-20s", "tau", "smeared", "point particle", "1/tau^2 estimate");
  for (const verify::LateTimePoint &p : a.points)
    t += line("%-16s %-20s %-20s %-20s", N(p.tau).c_str(), N(p.smeared).c_str(),
              N(p.point_particle).c_str(), N(p.inverse_square).c_str());
  t += line("smeared slope %s (%s), point-particle slope %s (%s)", N(a.smeared_slope).c_str(),
            a.smeared_regime.c_str(), N(a.point_particle_slope).c_str(),
            a.point_particle_regime.c_str());
  t += line("at the largest tau: smeared %s, 1/tau^2 estimate %s, 1/z^2 plateau %s",
            N(a.smeared_plateau).c_str(), N(a.inverse_square_at_end).c_str(),
            N(a.point_particle_plateau).c_str());

  const auto passed = std::count_if(r.criteria.begin(), r.criteria.end(),
                                    [](const verify::CriterionResult &c) { return c.passed; });
  t += line("\n%d/%d criteria passed", static_cast<int>(passed),
            static_cast<int>(r.criteria.size()));
  return t;
}

// ---- switching ------------------------------------------------------------

json switching_report(double tau, double mu, const std::vector<double> &times,
                      const std::vector<double> &chis, const QuadratureSpec &quad) {
  const LorentzPlateau F{tau, mu};
  F.validate();
  const PlateauMoments m = plateau_moments(F, quad);
  json values = json::array();
  for (double t : times)
    values.push_back({{"t", number(t)}, {"F", number(lorentz_plateau_eval(F, t))}});
  json weights = json::array();
  for (double chi : chis)
    weights.push_back({{"chi", number(chi)}, {"f_cal", number(f_cal(chi))}});
  return {{"tau", number(tau)},
          {"mu", number(mu)},
          {"plateau_time", number(F.plateau_time())},
          {"tail_time", number(F.tail_time())},
          {"plateau_area", number(m.plateau_area)},
          {"tail_area", number(m.tail_area.value)},
          {"tail_area_error", number(m.tail_area.error)},
          {"F", std::move(values)},
          {"f_cal", std::move(weights)},
          {"f_cal_limits",
           {{"zero", number(f_cal_at_zero())}, {"infinity", number(f_cal_at_infinity())}}}};
}

// ---- limits ---------------------------------------------------------------

struct LimitsRow {
  Component component;
  double smeared = kNaN;
  double point = kNaN;
  AsymptoteValue late;
  AsymptoteValue early;
  DimensionlessPoint dimless;
};

LimitsRow limits_row(const Settings &s, Component c) {
  LimitsRow row{c, kNaN, kNaN, {}, {}, derive_dimensionless(s.physical)};
  try {
    row.point = point_particle(s.physical, c).value;
  } catch (const SingularPointError &) {
  }
  row.smeared = dispersion(s.physical, c, s.quad).value;
  row.late = asymptote(s.physical, c, AsymptoticRegime::late_time, s.quad);
  row.early = asymptote(s.physical, c, AsymptoticRegime::short_time, s.quad);
  return row;
}

json limits_json(const Settings &s, const std::vector<LimitsRow> &rows) {
  json out_rows = json::array();
  for (const LimitsRow &r : rows)
    out_rows.push_back({{"component", std::string(to_string(r.component))},
                        {"smeared", number(r.smeared)},
                        {"point_particle", number(r.point)},
                        {"late_time", number(r.late.value)},
                        {"late_time_coefficient", number(r.late.coefficient)},
                        {"late_time_estimate", number(r.late.estimate_value.value_or(kNaN))},
                        {"short_time", number(r.early.value)}});
  const DimensionlessPoint p = derive_dimensionless(s.physical);
  return {{"config", s.physical},
          {"sigma", number(p.sigma)},
          {"beta", number(p.beta)},
          {"regime", classify_regime(p.sigma, p.beta)},
          {"limits", std::move(out_rows)}};
}

std::string limits_text(const Settings &s, const std::vector<LimitsRow> &rows) {
  const DimensionlessPoint p = derive_dimensionless(s.physical);
  std::string t = line("sigma = 2z/tau = %s, beta = sqrt(2) b/tau = %s, regime %s",
                       N(p.sigma).c_str(), N(p.beta).c_str(),
                       regime_string(classify_regime(p.sigma, p.beta)).c_str());
  t += line("%-4s %-20s %-20s %-20s %-20s %-20s", "", "smeared", "point particle", "late time",
            "late (1/12, 1/6)", "short time");
  for (const LimitsRow &r : rows)
    t += line("%-4s %-20s %-20s %-20s %-20s %-20s", std::string(to_string(r.component)).c_str(),
              N(r.smeared).c_str(), N(r.point).c_str(), N(r.late.value).c_str(),
              N(r.late.estimate_value.value_or(kNaN)).c_str(), N(r.early.value).c_str());
  return t;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  const bool error_json_requested =
      std::find(args.begin(), args.end(), "--error-json") != args.end();
  auto fail = [&](const Error &e) {
    if (error_json_requested) {
      json j = {{"error", {{"kind", e.kind}, {"message", e.message}, {"exit_code", e.code}}}};
      j["error"].update(e.extra);
      out << j.dump(2) << '\n';
    }
    err << "vacfluct: " << e.message << '\n';
    return e.code;
  };

  CLI::App app{"Velocity dispersion of a charged particle near a reflecting plate", "vacfluct"};
  app.set_version_flag("--version", version_string() + ", CLI11 " CLI11_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  bool error_json = false;
  std::string config_path;
  app.add_flag("--error-json", error_json, "describe failures as JSON on stdout");
  app.add_option("--config", config_path, "key=value file (flags take precedence)");

  Overrides flags;
  std::string component = "z";

  CLI::App *disp = app.add_subcommand("dispersion", "one point, both evaluation routes, JSON");
  add_physics_flags(disp, flags);
  add_component_flag(disp, component);

  CLI::App *sweep = app.add_subcommand("sweep", "parameter sweep as CSV or JSON");
  add_physics_flags(sweep, flags);
  add_component_flag(sweep, component);
  std::string param, format = "csv";
  SweepRange range;
  range.points = 25;
  bool log_spacing = false;
  unsigned threads = 0;
  sweep->add_option("--param", param, "tau, z, b or mu")
      ->required()
      ->check(CLI::IsMember({"tau", "z", "b", "mu"}));
  sweep->add_option("--from", range.from, "first value")->required();
  sweep->add_option("--to", range.to, "last value")->required();
  sweep->add_option("--points", range.points, "grid size (default 25)");
  sweep->add_flag("--log", log_spacing, "logarithmic spacing");
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--threads", threads, "worker threads (default: all cores)");

  CLI::App *ver = app.add_subcommand("verify", "acceptance suite and audit tables");
  std::string verify_format = "text";
  ver->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  std::optional<double> verify_rel_tol;
  ver->add_option("--rel-tol", verify_rel_tol, "quadrature relative tolerance");

  CLI::App *sw = app.add_subcommand("switching", "Lorentz-plateau switching function");
  double sw_tau = 1.0, sw_mu = 0.0;
  std::vector<double> times, chis;
  sw->add_option("--tau", sw_tau, "plateau duration (default 1)");
  sw->add_option("--mu", sw_mu, "relative tail duration (default 0)");
  sw->add_option("--t", times, "times at which to evaluate F");
  sw->add_option("--chi", chis, "arguments of the tail weight");

  CLI::App *lim = app.add_subcommand("limits", "point-particle, late- and short-time values");
  add_physics_flags(lim, flags);
  std::string lim_component = "both", lim_format = "text";
  lim->add_option("--component", lim_component, "z, x, y or both")
      ->check(CLI::IsMember({"z", "x", "y", "both"}));
  lim->add_option("--format", lim_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back(); // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion &e) {
    out << e.what() << '\n';
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    // Subcommand help arrives as a CallForHelp from the subcommand.
    if (e.get_exit_code() == 0) {
      const auto subs = app.get_subcommands();
      out << (subs.empty() ? app.help() : subs.front()->help());
      return kOk;
    }
    return fail({"usage", e.what(), kUsage});
  }

  try {
    const Overrides file = config_path.empty() ? Overrides{} : read_config_file(config_path);

    if (*disp) {
      const Settings s = resolve_settings(file, flags);
      out << dispersion_report(s, component_from_string(component)).dump(2) << '\n';
      return kOk;
    }

    if (*sweep) {
      const Settings s = resolve_settings(file, flags);
      SweepRequest req;
      req.component = component_from_string(component);
      req.parameter = parameter_from_string(param);
      req.range = range;
      req.range.spacing = log_spacing ? Spacing::log : Spacing::linear;
      req.fixed = s.physical;
      req.quad = s.quad;
      req.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
      req.threads = threads;
      const std::vector<SweepRow> rows = run_sweep(req);
      if (req.format == OutputFormat::csv)
        write_csv(out, req, rows);
      else
        out << sweep_json(req, rows).dump(2) << '\n';
      return kOk;
    }

    if (*ver) {
      QuadratureSpec quad;
      if (file.rel_tol)
        quad.rel_tol = *file.rel_tol;
      if (verify_rel_tol)
        quad.rel_tol = *verify_rel_tol;
      quad.validate();
      const verify::Report report = verify::run_all(quad);
      if (verify_format == "json")
        out << json(report).dump(2) << '\n';
      else
        out << verify_text(report);
      if (!report.all_passed())
        return fail({"verification", "acceptance suite reported failures", kVerification});
      return kOk;
    }

    if (*sw) {
      out << switching_report(sw_tau, sw_mu, times, chis, QuadratureSpec{}).dump(2) << '\n';
      return kOk;
    }

    if (*lim) {
      const Settings s = resolve_settings(file, flags);
      std::vector<LimitsRow> rows;
      if (lim_component == "both") {
        rows.push_back(limits_row(s, Component::z));
        rows.push_back(limits_row(s, Component::x_or_y));
      } else {
        rows.push_back(limits_row(s, component_from_string(lim_component)));
      }
      if (lim_format == "json")
        out << limits_json(s, rows).dump(2) << '\n';
      else
        out << limits_text(s, rows);
      return kOk;
    }
  } catch (const UsageError &e) {
    return fail({"usage", e.what(), kUsage});
  } catch (const DomainError &e) {
    return fail({"domain", e.what(), kUsage, {{"field", e.field()}}});
  } catch (const SingularPointError &e) {
    return fail({"singular_point", e.what(), kNumeric, {{"location", number(e.location())}}});
  } catch (const QuadratureError &e) {
    return fail({"quadrature",
                 e.what(),
                 kNumeric,
                 {{"value", number(e.value())}, {"achieved_error", number(e.achieved_error())}}});
  } catch (const std::exception &e) {
    return fail({"numeric", e.what(), kNumeric});
  }
  return fail({"usage", "no subcommand given", kUsage});
}

} // namespace vacfluct::cli
