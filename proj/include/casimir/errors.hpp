#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or incomplete configuration (bad key, missing field, bad value).
class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// A quadrature or series did not reach the requested tolerance.
/// Carries the best available estimate and its error bound.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string& msg, double best, double err_rel)
        : Error(msg), best_estimate(best), err_est(err_rel) {}
    double best_estimate;  ///< best value obtained before giving up
    double err_est;        ///< relative error estimate of best_estimate
};

/// A reflection amplitude product exceeded 1 (non-passive input).
class PassivityError : public Error {
  public:
    explicit PassivityError(const std::string& msg) : Error(msg) {}
};

/// File could not be read, parsed, or written.
class IoError : public Error {
  public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace casimir
