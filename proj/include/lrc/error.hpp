#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrc {

enum class ErrorKind {
  CompositeCharacteristic,
  ReduciblePolynomial,
  UnsupportedExtension,
  DivisionByZero,
  FieldMismatch,
  BoundTooLarge,
  IndexOutOfRange,
  DimensionMismatch,
  BudgetExceeded,
  InvalidParams,
  BoundNonPositive,
  NotDivisible,
  PreconditionViolated,
  TooFewGroups,
  CoverIncomplete,
  FieldTooSmall,
  NoValidVector,
  NotConstructible,
  UnknownCase,
  StructureMismatch,
  RankDeficient,
  FormatError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lrc
