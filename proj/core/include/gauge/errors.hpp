#pragma once

#include <stdexcept>
#include <string>

namespace gauge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidIndexError : Error { using Error::Error; };
struct DegreeError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct TypeError : Error { using Error::Error; };
struct GroupError : Error { using Error::Error; };
struct TopologyError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct CurveError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// Carries the last residual so callers can report how close the solve got.
struct ConvergenceError : Error {
  double residual;
  ConvergenceError(const std::string& msg, double r) : Error(msg), residual(r) {}
};

}  // namespace gauge
