#include "lrc/error.hpp"

namespace lrc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::BoundNonPositive: return "BoundNonPositive";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::TooFewGroups: return "TooFewGroups";
    case ErrorKind::CoverIncomplete: return "CoverIncomplete";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::NoValidVector: return "NoValidVector";
    case ErrorKind::NotConstructible: return "NotConstructible";
    case ErrorKind::UnknownCase: return "UnknownCase";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::FormatError: return "FormatError";
  }
  return "Unknown";
}

}  // namespace lrc
