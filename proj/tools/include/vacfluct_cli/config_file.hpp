#pragma once

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "vacfluct/params.hpp"

namespace vacfluct::cli {

// Bad command line or config file; exit status 1.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Values that may come from a flag or from the config file.  Unset members
// fall through to the next source.
struct Overrides {
  std::optional<double> e2, mass, z, tau, b, mu;
  std::optional<double> rel_tol, abs_tol;
};

// Line-oriented key=value text.  Blank lines and lines starting with '#' are
// skipped, whitespace around keys and values is ignored.  Recognised keys:
// e2 mass z tau b mu rel_tol abs_tol.  `source` names the input in errors.
Overrides parse_config(std::istream &in, const std::string &source);
Overrides read_config_file(const std::string &path);

struct Settings {
  PhysicalConfig physical;
  QuadratureSpec quad;
};

// defaults < file < flags, then validated.
Settings resolve_settings(const Overrides &file, const Overrides &flags);

} // namespace vacfluct::cli
