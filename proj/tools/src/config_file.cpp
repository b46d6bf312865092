#include "vacfluct_cli/config_file.hpp"

#include <cmath>
#include <fstream>

namespace vacfluct::cli {

namespace {

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> *slot(Overrides &o, const std::string &key) {
  static const std::map<std::string, std::optional<double> Overrides::*> keys = {
      {"e2", &Overrides::e2},           {"mass", &Overrides::mass},
      {"z", &Overrides::z},             {"tau", &Overrides::tau},
      {"b", &Overrides::b},             {"mu", &Overrides::mu},
      {"rel_tol", &Overrides::rel_tol}, {"abs_tol", &Overrides::abs_tol}};
  const auto it = keys.find(key);
  return it == keys.end() ? nullptr : &(o.*(it->second));
}

template <class T> void take(T &target, const std::optional<T> &a, const std::optional<T> &b) {
  if (b)
    target = *b;
  else if (a)
    target = *a;
}

} // namespace

Overrides parse_config(std::istream &in, const std::string &source) {
  Overrides o;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#')
      continue;
    const std::string where = source + ":" + std::to_string(number);
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw UsageError(where + ": expected key=value");
    const std::string key = trim(body.substr(0, eq));
    const std::string text = trim(body.substr(eq + 1));
    std::optional<double> *target = slot(o, key);
    if (!target)
      throw UsageError(where + ": unknown key '" + key + "'");
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(value))
      throw UsageError(where + ": '" + text + "' is not a finite number");
    *target = value;
  }
  return o;
}

Overrides read_config_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open config file '" + path + "'");
  return parse_config(in, path);
}

Settings resolve_settings(const Overrides &file, const Overrides &flags) {
  Settings s;
  PhysicalConfig &p = s.physical;
  take(p.charge_sq, file.e2, flags.e2);
  take(p.mass, file.mass, flags.mass);
  take(p.distance_z, file.z, flags.z);
  take(p.measure_time_tau, file.tau, flags.tau);
  take(p.packet_width_b, file.b, flags.b);
  take(p.switching_mu, file.mu, flags.mu);
  take(s.quad.rel_tol, file.rel_tol, flags.rel_tol);
  take(s.quad.abs_tol, file.abs_tol, flags.abs_tol);
  p.validate();
  s.quad.validate();
  return s;
}

} // namespace vacfluct::cli
