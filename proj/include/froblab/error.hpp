#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace froblab {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  UnknownVariable,
  SyntaxError,
  ExponentOverflow,
  RingMismatch,
  BudgetExceeded,
  ZeroColonDivisor,
  UnitIdeal,
  NotArtinian,
  ZeroElement,
  NotNZD,
  NotRegularSequence,
  TypeNotOne,
  InjectivityFailure,
  EvenCharacteristic,
  OddCharacteristic,
  InputAssumptionViolation,
  ContextMismatch,
  NotInCanonicalIdeal,
  BadMatrixShape,
  MissingField,
  FileError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ZeroColonDivisor: return "ZeroColonDivisor";
    case ErrorCode::UnitIdeal: return "UnitIdeal";
    case ErrorCode::NotArtinian: return "NotArtinian";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotNZD: return "NotNZD";
    case ErrorCode::NotRegularSequence: return "NotRegularSequence";
    case ErrorCode::TypeNotOne: return "TypeNotOne";
    case ErrorCode::InjectivityFailure: return "InjectivityFailure";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::OddCharacteristic: return "OddCharacteristic";
    case ErrorCode::InputAssumptionViolation: return "InputAssumptionViolation";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NotInCanonicalIdeal: return "NotInCanonicalIdeal";
    case ErrorCode::BadMatrixShape: return "BadMatrixShape";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::FileError: return "FileError";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable code. Parser errors also carry the
/// byte offset into the input text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(what), code_(code), offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace froblab
