#include "trinom/error.hpp"

namespace trinom {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::NotInSubfield: return "NotInSubfield";
    case ErrorKind::NonIntegerSum: return "NonIntegerSum";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::ZeroRho: return "ZeroRho";
    case ErrorKind::DimensionNotThree: return "DimensionNotThree";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::ConditionsNotMet: return "ConditionsNotMet";
    case ErrorKind::QTooSmall: return "QTooSmall";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace trinom
