#include "vacfluct_cli/json_io.hpp"

#include <string>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "vacfluct/errors.hpp"

namespace vacfluct::cli {

double round12(double x) {
  if (!std::isfinite(x))
    return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  if (std::isnan(x))
    return "nan";
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

nlohmann::json number(double x) {
  if (!std::isfinite(x))
    return nullptr;
  return round12(x);
}

double read_number(const nlohmann::json &j) {
  if (j.is_null())
    return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

std::string regime_string(const RegimeFlags &f) {
  std::string s;
  auto add = [&s](bool on, const char *name) {
    if (!on)
      return;
    if (!s.empty())
      s += '|';
    s += name;
  };
  add(f.late_time, "late_time");
  add(f.short_time, "short_time");
  add(f.pole_adjacent, "pole_adjacent");
  add(f.point_particle, "point_particle");
  return s.empty() ? "none" : s;
}

std::string version_string() {
  return std::string("vacfluct ") + VACFLUCT_VERSION + ", nlohmann_json " +
         std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + '.' +
         std::to_string(NLOHMANN_JSON_VERSION_MINOR) + '.' +
         std::to_string(NLOHMANN_JSON_VERSION_PATCH);
}

} // namespace vacfluct::cli

namespace vacfluct {

using nlohmann::json;
using cli::number;
using cli::read_number;

void to_json(json &j, const PhysicalConfig &c) {
  j = json{{"e2", number(c.charge_sq)},       {"mass", number(c.mass)},
           {"z", number(c.distance_z)},       {"tau", number(c.measure_time_tau)},
           {"b", number(c.packet_width_b)},   {"mu", number(c.switching_mu)}};
}

void from_json(const json &j, PhysicalConfig &c) {
  c.charge_sq = read_number(j.at("e2"));
  c.mass = read_number(j.at("mass"));
  c.distance_z = read_number(j.at("z"));
  c.measure_time_tau = read_number(j.at("tau"));
  c.packet_width_b = read_number(j.at("b"));
  c.switching_mu = read_number(j.at("mu"));
}

void to_json(json &j, const QuadratureSpec &q) {
  j = json{{"rel_tol", number(q.rel_tol)},
           {"abs_tol", number(q.abs_tol)},
           {"max_subdivisions", q.max_subdivisions},
           {"hermite_nodes", q.hermite_nodes},
           {"tail_truncation", number(q.tail_truncation)},
           {"singularity_exclusion", number(q.singularity_exclusion)}};
}

void from_json(const json &j, QuadratureSpec &q) {
  q.rel_tol = read_number(j.at("rel_tol"));
  q.abs_tol = read_number(j.at("abs_tol"));
  q.max_subdivisions = j.at("max_subdivisions").get<int>();
  q.hermite_nodes = j.at("hermite_nodes").get<int>();
  q.tail_truncation = read_number(j.at("tail_truncation"));
  q.singularity_exclusion = read_number(j.at("singularity_exclusion"));
}

void to_json(json &j, const RegimeFlags &f) {
  j = json{{"late_time", f.late_time},
           {"short_time", f.short_time},
           {"pole_adjacent", f.pole_adjacent},
           {"point_particle", f.point_particle}};
}

void from_json(const json &j, RegimeFlags &f) {
  j.at("late_time").get_to(f.late_time);
  j.at("short_time").get_to(f.short_time);
  j.at("pole_adjacent").get_to(f.pole_adjacent);
  j.at("point_particle").get_to(f.point_particle);
}

void to_json(json &j, const ValidityReport &v) {
  j = json{{"displacement_ok", v.displacement_ok},
           {"spread_ok", v.spread_ok},
           {"packet_size_ok", v.packet_size_ok}};
}

void from_json(const json &j, ValidityReport &v) {
  j.at("displacement_ok").get_to(v.displacement_ok);
  j.at("spread_ok").get_to(v.spread_ok);
  j.at("packet_size_ok").get_to(v.packet_size_ok);
}

void to_json(json &j, const DispersionResult &r) {
  j = json{{"component", std::string(to_string(r.component))},
           {"route", std::string(to_string(r.route))},
           {"value", number(r.value)},
           {"error_estimate", number(r.error_estimate)},
           {"sigma", number(r.sigma)},
           {"beta", number(r.beta)},
           {"regime", r.regime},
           {"validity", r.validity}};
}

void from_json(const json &j, DispersionResult &r) {
  r.component = component_from_string(j.at("component").get<std::string>());
  r.route = route_from_string(j.at("route").get<std::string>());
  r.value = read_number(j.at("value"));
  r.error_estimate = read_number(j.at("error_estimate"));
  r.sigma = read_number(j.at("sigma"));
  r.beta = read_number(j.at("beta"));
  j.at("regime").get_to(r.regime);
  j.at("validity").get_to(r.validity);
}

void to_json(json &j, const Estimate &e) {
  j = json{{"value", number(e.value)},
           {"error", number(e.error)},
           {"evaluations", e.evaluations},
           {"converged", e.converged}};
}

void from_json(const json &j, Estimate &e) {
  e.value = read_number(j.at("value"));
  e.error = read_number(j.at("error"));
  j.at("evaluations").get_to(e.evaluations);
  j.at("converged").get_to(e.converged);
}

Component component_from_string(const std::string &s) {
  if (s == "z")
    return Component::z;
  if (s == "x" || s == "y")
    return Component::x_or_y;
  throw DomainError("component", "expected z, x or y, got '" + s + "'");
}

Route route_from_string(const std::string &s) {
  if (s == "closed_form")
    return Route::closed_form;
  if (s == "raw_integral")
    return Route::raw_integral;
  throw DomainError("route", "expected closed_form or raw_integral, got '" + s + "'");
}

namespace verify {

void to_json(json &j, const CriterionResult &c) {
  j = json{{"id", c.id},
           {"title", c.title},
           {"passed", c.passed},
           {"detail", c.detail},
           {"seconds", number(c.seconds)}};
}

void to_json(json &j, const CoefficientAuditRow &r) {
  j = json{{"sigma", number(r.sigma)},         {"beta", number(r.beta)},
           {"A", r.a},                         {"B", r.b},
           {"A_rel_dev", number(r.a_rel_dev)}, {"B_rel_dev", number(r.b_rel_dev)},
           {"B_pole_split", number(r.b_pole_split)}, {"B_pv_gap", number(r.b_pv_gap)}};
}

void to_json(json &j, const SwitchingAuditRow &r) {
  j = json{{"mu", number(r.mu)},
           {"nu", number(r.nu)},
           {"decomposition", number(r.decomposition)},
           {"oracle", number(r.oracle)},
           {"rel_deviation", number(r.rel_deviation)}};
}

void to_json(json &j, const LateTimeAudit &a) {
  json points = json::array();
  for (const LateTimePoint &p : a.points)
    points.push_back({{"tau", number(p.tau)},
                      {"smeared", number(p.smeared)},
                      {"point_particle", number(p.point_particle)},
                      {"inverse_square", number(p.inverse_square)},
                      {"smeared_tol_change", number(p.smeared_tol_change)},
                      {"point_particle_tol_change", number(p.point_particle_tol_change)}});
  j = json{{"z", number(a.z)},
           {"b", number(a.b)},
           {"points", std::move(points)},
           {"smeared_slope", number(a.smeared_slope)},
           {"point_particle_slope", number(a.point_particle_slope)},
           {"smeared_plateau", number(a.smeared_plateau)},
           {"point_particle_plateau", number(a.point_particle_plateau)},
           {"inverse_square_at_end", number(a.inverse_square_at_end)},
           {"smeared_regime", a.smeared_regime},
           {"point_particle_regime", a.point_particle_regime}};
}

void to_json(json &j, const Report &r) {
  j = json{{"all_passed", r.all_passed()},
           {"criteria", r.criteria},
           {"coefficients", r.coefficients},
           {"switching", r.switching},
           {"late_time", r.late_time}};
}

} // namespace verify

} // namespace vacfluct
