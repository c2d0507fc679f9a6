#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mukai {

enum class ErrorKind {
  InvalidArgument,
  InvalidLattice,
  DimensionMismatch,
  NotSpherical,
  ZeroVector,
  NotCoprime,
  NoBezoutSolution,
  RangeError,
  NonPositiveK,
  IdentityViolation,
  MissingParam,
  BelowSpherical,
  IndexOutOfRange,
  BudgetExceeded,
  NotRankOneLattice,
  NotPureDimensionOne,
  NonPositiveSquare,
  NotRankTwo,
  InvalidCone,
  RankTooSmall,
  SearchExhausted,
  HypothesisFailed,
  NoCertificateFound,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mukai
