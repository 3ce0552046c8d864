#pragma once

#include <stdexcept>
#include <string>

namespace jumploci {

enum class ErrorCode {
  DivisionByZero,
  DimensionMismatch,
  SizeOutOfRange,
  MinorBudgetExceeded,
  NotDivisible,
  UnsupportedTorsion,
  CocycleViolation,
  ZeroVector,
  NotOpposed,
  PreconditionFailed,
  InvariantViolation,
  FiltrationNotStable,
  InconsistentMonodromy,
  Unsupported,
  SchemaError,
  Overflow,
};

const char* error_name(ErrorCode code);

/// Base of every error raised by the library. The code identifies the
/// failure class; the message carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) raise(code, what);
}

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::MinorBudgetExceeded: return "MinorBudgetExceeded";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::UnsupportedTorsion: return "UnsupportedTorsion";
    case ErrorCode::CocycleViolation: return "CocycleViolation";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotOpposed: return "NotOpposed";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::FiltrationNotStable: return "FiltrationNotStable";
    case ErrorCode::InconsistentMonodromy: return "InconsistentMonodromy";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Error";
}

}  // namespace jumploci
