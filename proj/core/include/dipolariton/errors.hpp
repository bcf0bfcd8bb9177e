#pragma once

#include <stdexcept>
#include <string>

namespace dipolariton {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic or conversion across incompatible physical dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A parameter violates its documented domain (negative length, bad rung, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The effective Hamiltonian produced gain where only loss is allowed.
class ModelViolation : public Error {
 public:
  using Error::Error;
};

/// The eigensolver could not certify its result.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

/// A sweep point failed; carries the bias field (kV/cm) where it happened.
class SweepFailure : public NumericalFailure {
 public:
  SweepFailure(const std::string& what, double field_kv_per_cm, double best_residual)
      : NumericalFailure(what, best_residual), field_(field_kv_per_cm) {}

  double field_kv_per_cm() const noexcept { return field_; }

 private:
  double field_;
};

/// Malformed configuration text. `line()` is 1-based, 0 when not line-specific.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, int line) : ConfigError(what, line, "") {}

  /// Message reads "source: line N: what"; empty parts are left out.
  ConfigError(const std::string& what, int line, const std::string& source)
      : Error((source.empty() ? "" : source + ": ") + (line > 0 ? "line " + std::to_string(line) + ": " : "") +
              what),
        line_(line),
        reason_(what) {}

  int line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  int line_;
  std::string reason_;
};

}  // namespace dipolariton
