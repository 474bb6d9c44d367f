#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trinom {

enum class ErrorKind {
  NonPrime,
  NotPrimitive,
  CapExceeded,
  DivisionByZero,
  NotADivisor,
  NotInSubfield,
  NonIntegerSum,
  PreconditionViolated,
  EvenCharacteristic,
  ZeroRho,
  DimensionNotThree,
  WrongDegree,
  InconsistentInput,
  ConditionsNotMet,
  QTooSmall,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers which
/// contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trinom
