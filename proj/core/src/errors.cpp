#include "vacfluct/errors.hpp"

#include <cstdio>
#include <utility>

namespace vacfluct {

DomainError::DomainError(std::string field, const std::string &what)
    : std::domain_error(field + ": " + what), field_(std::move(field)) {}

SingularPointError::SingularPointError(double location, const std::string &what)
    : std::domain_error(what), location_(location) {}

namespace {
std::string with_estimate(const std::string &what, double err) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " (achieved error estimate %.3e)", err);
  return what + buf;
}
} // namespace

QuadratureError::QuadratureError(double value, double achieved_error,
                                 const std::string &what)
    : std::runtime_error(with_estimate(what, achieved_error)), value_(value),
      achieved_error_(achieved_error) {}

} // namespace vacfluct
