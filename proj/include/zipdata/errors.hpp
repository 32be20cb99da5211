#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zipdata {

enum class ErrorCode {
  NonFiniteType,
  MalformedMatrix,
  IndexOutOfRange,
  GroupMismatch,
  NotDoubleCosetRep,
  NotMinimalRep,
  PsiNotBijective,
  PsiNotCoxeter,
  SubsetMismatch,
  ElementNotInGroup,
  NotAHomomorphism,
  LatticeTooLarge,
  GroupTooLarge,
  NotInParamSet,
  NonSimpleConjugate,
  MatrixViolation,
  WrongMode,
  Unsupported,
  ParseError,
  NonUniqueMinimum,
  OracleMismatch,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFiniteType: return "NonFiniteType";
    case ErrorCode::MalformedMatrix: return "MalformedMatrix";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotDoubleCosetRep: return "NotDoubleCosetRep";
    case ErrorCode::NotMinimalRep: return "NotMinimalRep";
    case ErrorCode::PsiNotBijective: return "PsiNotBijective";
    case ErrorCode::PsiNotCoxeter: return "PsiNotCoxeter";
    case ErrorCode::SubsetMismatch: return "SubsetMismatch";
    case ErrorCode::ElementNotInGroup: return "ElementNotInGroup";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::LatticeTooLarge: return "LatticeTooLarge";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotInParamSet: return "NotInParamSet";
    case ErrorCode::NonSimpleConjugate: return "NonSimpleConjugate";
    case ErrorCode::MatrixViolation: return "MatrixViolation";
    case ErrorCode::WrongMode: return "WrongMode";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonUniqueMinimum: return "NonUniqueMinimum";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace zipdata
