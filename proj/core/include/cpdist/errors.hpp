#pragma once

#include <stdexcept>
#include <string>

namespace cpdist {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A distribution parameter lies outside its admissible domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An index or value is outside the range a structure was built for.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A requested size exceeds the configured memory or cost bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data. `line()` is 1-based, or 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Observed data take a value outside the support of X (X >= 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Sample moments violate the conditions a moment estimator needs.
class MomentConditionError : public Error {
 public:
  using Error::Error;
};

/// A simulated chain did not terminate within the step budget, or overflowed.
class SamplingError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpdist
