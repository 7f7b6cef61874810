#include "km/error.hpp"

namespace km {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::IllegalLetterForSide: return "IllegalLetterForSide";
    case ErrorCode::IllegalLetter: return "IllegalLetter";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::DegenerateLevel: return "DegenerateLevel";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NonNormalizable: return "NonNormalizable";
    case ErrorCode::RingCannotEvaluateRoots: return "RingCannotEvaluateRoots";
    case ErrorCode::MixedContexts: return "MixedContexts";
    case ErrorCode::NonIntegralRoots: return "NonIntegralRoots";
    case ErrorCode::NotCentralModP: return "NotCentralModP";
    case ErrorCode::NonDivisibleCoefficient: return "NonDivisibleCoefficient";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace km
