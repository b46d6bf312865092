#pragma once

#include <string>

#include "json.hpp"

#include "vacfluct/dispersion.hpp"
#include "vacfluct/params.hpp"
#include "vacfluct/quadrature.hpp"
#include "vacfluct/verify.hpp"

// JSON forms of the value types the tool emits.  Every number goes through
// round12 first, so a report and its re-parse print identically.
namespace vacfluct {

void to_json(nlohmann::json &j, const PhysicalConfig &c);
void from_json(const nlohmann::json &j, PhysicalConfig &c);

void to_json(nlohmann::json &j, const QuadratureSpec &q);
void from_json(const nlohmann::json &j, QuadratureSpec &q);

void to_json(nlohmann::json &j, const RegimeFlags &f);
void from_json(const nlohmann::json &j, RegimeFlags &f);

void to_json(nlohmann::json &j, const ValidityReport &v);
void from_json(const nlohmann::json &j, ValidityReport &v);

void to_json(nlohmann::json &j, const DispersionResult &r);
void from_json(const nlohmann::json &j, DispersionResult &r);

void to_json(nlohmann::json &j, const Estimate &e);
void from_json(const nlohmann::json &j, Estimate &e);

Component component_from_string(const std::string &s);
Route route_from_string(const std::string &s);

namespace verify {
void to_json(nlohmann::json &j, const CriterionResult &c);
void to_json(nlohmann::json &j, const CoefficientAuditRow &r);
void to_json(nlohmann::json &j, const SwitchingAuditRow &r);
void to_json(nlohmann::json &j, const LateTimeAudit &a);
void to_json(nlohmann::json &j, const Report &r);
} // namespace verify

} // namespace vacfluct

namespace vacfluct::cli {

// x rounded to 12 significant digits; non-finite values pass through.
double round12(double x);

// "%.12g", with nan / inf spelled out.
std::string format12(double x);

// A number for a JSON document: rounded, or null when not finite.
nlohmann::json number(double x);

// Inverse of `number`: null reads back as NaN.
double read_number(const nlohmann::json &j);

// "late_time|pole_adjacent", or "none".
std::string regime_string(const RegimeFlags &f);

// "vacfluct 0.3.0, nlohmann_json 3.11.3": everything that shapes the output.
std::string version_string();

} // namespace vacfluct::cli
