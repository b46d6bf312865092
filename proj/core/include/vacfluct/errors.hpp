#pragma once

#include <stdexcept>
#include <string>

namespace vacfluct {

// Invalid parameter values (non-positive distance, negative width, ...).
class DomainError : public std::domain_error {
public:
  DomainError(std::string field, const std::string &what);
  const std::string &field() const noexcept { return field_; }

private:
  std::string field_;
};

// Evaluation requested on (or within the exclusion band of) a pole or a
// logarithmic branch point.
class SingularPointError : public std::domain_error {
public:
  SingularPointError(double location, const std::string &what);
  double location() const noexcept { return location_; }

private:
  double location_;
};

// An adaptive integration did not reach its tolerance.  Carries the best
// value obtained and its error estimate so callers can decide what to do.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(double value, double achieved_error, const std::string &what);
  double value() const noexcept { return value_; }
  double achieved_error() const noexcept { return achieved_error_; }

private:
  double value_;
  double achieved_error_;
};

} // namespace vacfluct
