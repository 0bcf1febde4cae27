#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

enum class ErrorCode {
  NotSquare,
  NonSymmetric,
  NegativeEntry,
  ZeroOffDiagonal,
  NotAMetric,
  EmptySubset,
  IndexOutOfRange,
  DuplicateIndex,
  OverlappingSets,
  InvalidRadius,
  TooManyAtoms,
  InvalidAlpha,
  InvalidDelta,
  InadmissibleAtom,
  NegativeWeight,
  DegenerateGrid,
  TooFewPoints,
  BadSymbol,
  NotACovering,
  TooLarge,
  InvalidExponent,
  NotInjective,
  DegenerateProfile,
  BadPartition,
  NotASample,
  DomainMismatch,
  TooManySegments,
  LipschitzViolation,
  BadParams,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

// Errors caused by size limits or degenerate numeric grids rather than
// malformed input. The CLI maps these to a distinct exit code.
bool is_limit_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hlab
