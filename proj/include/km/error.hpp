#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace km {

enum class ErrorCode {
  ZeroDenominator,
  DivisionByZero,
  NotDivisible,
  NotPrime,
  ParseError,
  DimensionMismatch,
  UnsupportedKind,
  ZeroVector,
  NotNormalized,
  IllegalLetterForSide,
  IllegalLetter,
  NotInLattice,
  DegenerateLevel,
  BadVertex,
  NotARoot,
  DegreeZero,
  NotGeneric,
  DegreeMismatch,
  NonNormalizable,
  RingCannotEvaluateRoots,
  MixedContexts,
  NonIntegralRoots,
  NotCentralModP,
  NonDivisibleCoefficient,
  NotReflexive,
  CharacteristicTooSmall,
  DegreeCapExceeded,
  Usage,
};

std::string_view code_name(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace km
