#ifndef RFIQKD_ERRORS_HPP
#define RFIQKD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rfiqkd {

/// Bad arguments, infeasible protocol parameters, malformed or out-of-range
/// configuration. Maps to CLI exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure inside an otherwise valid computation (degenerate
/// statistics, undefined bound, internal inconsistency). Maps to CLI exit
/// code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rfiqkd

#endif
