#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace charval {

enum class ErrorCode {
  RepeatedPoint,
  PointOutOfRange,
  DegreeMismatch,
  OrderBoundExceeded,
  TooManyClasses,
  NotNormal,
  NotCoprime,
  PrimeSearchExhausted,
  EigensplitFailure,
  OrthogonalityFailure,
  NonIntegralCodegree,
  SizeMismatch,
  InvalidPartition,
  UnknownName,
  ConstructionMismatch,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace charval
