#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphinv {

enum class ErrorCode {
  Parse,
  DuplicateEdge,
  ZeroWeight,
  IndexOutOfRange,
  HasLoops,
  NotSimple,
  NotSigned,
  TooLarge,
  NotUnweightedSimple,
  Singular,
  NotUniqueSachs,
  NotPerfectMatching,
  NotStellatedTree,
  NotCorona,
  NotSymmetric,
  NoSplit,
  WrongFamily,
  Disagreement,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::HasLoops: return "HasLoops";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotSigned: return "NotSigned";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotUnweightedSimple: return "NotUnweightedSimple";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotUniqueSachs: return "NotUniqueSachs";
    case ErrorCode::NotPerfectMatching: return "NotPerfectMatching";
    case ErrorCode::NotStellatedTree: return "NotStellatedTree";
    case ErrorCode::NotCorona: return "NotCorona";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoSplit: return "NoSplit";
    case ErrorCode::WrongFamily: return "WrongFamily";
    case ErrorCode::Disagreement: return "Disagreement";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
/// `Disagreement` is reserved for structural-vs-oracle mismatches.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphinv
