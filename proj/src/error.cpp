#include "hlab/error.hpp"

#include <cstdio>

#include "hlab/extended.hpp"

namespace hlab {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorCode::NotAMetric: return "NotAMetric";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateIndex: return "DuplicateIndex";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::TooManyAtoms: return "TooManyAtoms";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::InvalidDelta: return "InvalidDelta";
    case ErrorCode::InadmissibleAtom: return "InadmissibleAtom";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::DegenerateGrid: return "DegenerateGrid";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::BadSymbol: return "BadSymbol";
    case ErrorCode::NotACovering: return "NotACovering";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::DegenerateProfile: return "DegenerateProfile";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::NotASample: return "NotASample";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::TooManySegments: return "TooManySegments";
    case ErrorCode::LipschitzViolation: return "LipschitzViolation";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_limit_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::TooManyAtoms:
    case ErrorCode::TooLarge:
    case ErrorCode::TooManySegments:
    case ErrorCode::DegenerateGrid:
    case ErrorCode::TooFewPoints:
      return true;
    default:
      return false;
  }
}

std::string Extended::to_string() const {
  if (infinite_) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

double diameter_power(double diam, double alpha, bool nonempty) {
  if (!nonempty) return 0.0;
  if (alpha == 0.0) return 1.0;
  if (diam == 0.0) return 0.0;
  return std::pow(diam, alpha);
}

}  // namespace hlab
