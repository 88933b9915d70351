#pragma once

#include <stdexcept>
#include <string>

namespace hochbv {

enum class ErrorCode {
  RingMismatch,
  GroupMismatch,
  InvalidGroup,
  InfiniteGroup,
  CompositionNotZero,
  UnboundedComplex,
  UnsupportedBackend,
  CoefficientsNotInA,
  BimoduleMismatch,
  NotACycle,
  NotACocycle,
  NotFiniteDimensional,
  UnsupportedModule,
  UnsupportedRank,
  MissingBracket,
  DeltaNotSquareZero,
  NotADerivation,
  NotSquareZero,
  BNotSquareZero,
  NotInvertible,
  LinearSolveFailed,
  InvalidSpec,
  DivisionError,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::InfiniteGroup: return "InfiniteGroup";
    case ErrorCode::CompositionNotZero: return "CompositionNotZero";
    case ErrorCode::UnboundedComplex: return "UnboundedComplex";
    case ErrorCode::UnsupportedBackend: return "UnsupportedBackend";
    case ErrorCode::CoefficientsNotInA: return "CoefficientsNotInA";
    case ErrorCode::BimoduleMismatch: return "BimoduleMismatch";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorCode::UnsupportedModule: return "UnsupportedModule";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::MissingBracket: return "MissingBracket";
    case ErrorCode::DeltaNotSquareZero: return "DeltaNotSquareZero";
    case ErrorCode::NotADerivation: return "NotADerivation";
    case ErrorCode::NotSquareZero: return "NotSquareZero";
    case ErrorCode::BNotSquareZero: return "BNotSquareZero";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::LinearSolveFailed: return "LinearSolveFailed";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::DivisionError: return "DivisionError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hochbv
