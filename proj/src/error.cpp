#include "tri/error.hpp"

namespace tri {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleError: return "CycleError";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NotJoinPreserving: return "NotJoinPreserving";
    case ErrorKind::NotMeetPreserving: return "NotMeetPreserving";
    case ErrorKind::StructureNotPreserved: return "StructureNotPreserved";
    case ErrorKind::SideConditionViolated: return "SideConditionViolated";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::MonadMismatch: return "MonadMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::ScalarOutOfRange: return "ScalarOutOfRange";
    case ErrorKind::LensViolation: return "LensViolation";
    case ErrorKind::Incomparable: return "Incomparable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::EvalError: return "EvalError";
  }
  return "Error";
}

}  // namespace tri
