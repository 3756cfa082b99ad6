#include "simplex_kde/error.hpp"

namespace simplex_kde {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyVector: return "EmptyVector";
    case ErrorCode::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorCode::SumExceedsOne: return "SumExceedsOne";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RowNotNormalized: return "RowNotNormalized";
    case ErrorCode::NonPositiveShape: return "NonPositiveShape";
    case ErrorCode::BoundaryPoint: return "BoundaryPoint";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::EmptyData: return "EmptyData";
    case ErrorCode::NonPositiveBandwidth: return "NonPositiveBandwidth";
    case ErrorCode::SingleObservation: return "SingleObservation";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::InvalidRho: return "InvalidRho";
    case ErrorCode::LagTooLarge: return "LagTooLarge";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::InvalidLevel: return "InvalidLevel";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::UnparsableRow: return "UnparsableRow";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace simplex_kde
