#pragma once

#include <stdexcept>
#include <string>

namespace epow {

/// Mismatched ambient rings (different numbers of variables).
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on an argument value was violated.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An instance exceeds a documented size guard.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a successive colon ideal is not generated by variables.
/// `position` is the 1-based index of the offending generator in the order,
/// `offender` a printable minimal generator of the colon of degree >= 2.
class NotLinearQuotientsError : public std::runtime_error {
public:
  NotLinearQuotientsError(std::size_t position, std::string offender)
      : std::runtime_error("colon at position " + std::to_string(position) +
                           " is not generated by variables (contains " +
                           offender + ")"),
        position(position), offender(std::move(offender)) {}

  std::size_t position;
  std::string offender;
};

} // namespace epow
