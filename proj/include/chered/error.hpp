#pragma once

#include <stdexcept>
#include <string>

namespace chered {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an exact operation would need a root of unity beyond the cap.
struct ConductorError : Error {
  using Error::Error;
};

/// Raised when a group or lattice enumeration exceeds its size cap.
struct CapError : Error {
  using Error::Error;
};

/// Raised on malformed run configuration input. Carries a 1-based line number
/// (0 when no location applies).
struct ConfigError : Error {
  int line = 0;
  ConfigError(std::string msg, int line_no = 0) : Error(std::move(msg)), line(line_no) {}
};

/// Raised when a numerical routine leaves its validity envelope
/// (margin violations, step-count explosions, non-scalar actions).
struct CheckError : Error {
  using Error::Error;
};

}  // namespace chered
