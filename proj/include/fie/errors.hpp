#ifndef FIE_ERRORS_HPP
#define FIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fie {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument to a library operation (bad sizes, bad ranges, ...).
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(what) {}
};

/// Mathematical domain violation (log of a non-positive value, point
/// outside an interval, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A function evaluation failed while integrating or iterating.
/// `location` is the abscissa at which the failure occurred.
class EvalError : public Error {
 public:
  EvalError(const std::string& what, double location)
      : Error(what), location_(location) {}
  double location() const { return location_; }

 private:
  double location_;
};

}  // namespace fie

#endif  // FIE_ERRORS_HPP
