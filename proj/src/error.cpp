#include "mukai/error.hpp"

namespace mukai {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidLattice: return "InvalidLattice";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSpherical: return "NotSpherical";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NoBezoutSolution: return "NoBezoutSolution";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::NonPositiveK: return "NonPositiveK";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::MissingParam: return "MissingParam";
    case ErrorKind::BelowSpherical: return "BelowSpherical";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotRankOneLattice: return "NotRankOneLattice";
    case ErrorKind::NotPureDimensionOne: return "NotPureDimensionOne";
    case ErrorKind::NonPositiveSquare: return "NonPositiveSquare";
    case ErrorKind::NotRankTwo: return "NotRankTwo";
    case ErrorKind::InvalidCone: return "InvalidCone";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::NoCertificateFound: return "NoCertificateFound";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace mukai
