#pragma once

#include <stdexcept>
#include <string>

namespace simplex_kde {

enum class ErrorCode {
  EmptyVector,
  NegativeCoordinate,
  SumExceedsOne,
  InvalidDimension,
  DimensionMismatch,
  IndexOutOfRange,
  RowNotNormalized,
  NonPositiveShape,
  BoundaryPoint,
  InvalidExponent,
  EmptyData,
  NonPositiveBandwidth,
  SingleObservation,
  InvalidGrid,
  InvalidRho,
  LagTooLarge,
  ZeroVariance,
  InsufficientSamples,
  InvalidLevel,
  MissingColumn,
  UnparsableRow,
  UnknownSuite,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

//! All library failures are reported through this exception; code() names the
//! violated contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace simplex_kde
