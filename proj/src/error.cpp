#include "charval/error.hpp"

namespace charval {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RepeatedPoint: return "RepeatedPoint";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::TooManyClasses: return "TooManyClasses";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::PrimeSearchExhausted: return "PrimeSearchExhausted";
    case ErrorCode::EigensplitFailure: return "EigensplitFailure";
    case ErrorCode::OrthogonalityFailure: return "OrthogonalityFailure";
    case ErrorCode::NonIntegralCodegree: return "NonIntegralCodegree";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ConstructionMismatch: return "ConstructionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace charval
