#pragma once

#include <stdexcept>
#include <string>

namespace lagmesh {

// Invalid configuration or request: bad precision, out-of-range indices,
// missing reference entries.  Maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic breakdown: Newton or inverse-iteration budget exhausted,
// inconsistent Sturm counts, exponent overflow.  Maps to CLI exit code 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Requested more decimal digits than the working precision can certify.
class PrecisionExhausted : public ConfigError {
 public:
  explicit PrecisionExhausted(const std::string& what) : ConfigError(what) {}
};

// No reference expansion stored for the requested (lambda, state).
class MissingReference : public ConfigError {
 public:
  explicit MissingReference(const std::string& what) : ConfigError(what) {}
};

}  // namespace lagmesh
