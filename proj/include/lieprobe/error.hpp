#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lieprobe {

enum class ErrorCode {
  // algebra
  NonPrimeCharacteristic,
  OrderTooLarge,
  DimensionMismatch,
  InvalidForm,
  // graphs
  VertexOutOfRange,
  DisconnectedGraph,
  SizeLimitExceeded,
  MalformedInput,
  // geometry
  InvalidGeometry,
  NotAClique,
  MixedSingularDimensions,
  ShultViolated,
  Degenerate,
  CollinearPair,
  // generators
  RankTooSmall,
  InstanceTooLarge,
  InvalidParameters,
  // reconstruct
  EmptyGraph,
  RaysNotPartition,
  RaysUnequalSize,
  HeightTooSmall,
  RayNotClique,
  TrivialLocalGraph,
  HeightMismatch,
  NotAdjacent,
  WrongRaySize,
  PreconditionViolated,
  CollapsedSpan,
  PointGraphMismatch,
  InconsistentCrossEdges,
  NotPartialLinear,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidForm: return "InvalidForm";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::MixedSingularDimensions: return "MixedSingularDimensions";
    case ErrorCode::ShultViolated: return "ShultViolated";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::CollinearPair: return "CollinearPair";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::RaysNotPartition: return "RaysNotPartition";
    case ErrorCode::RaysUnequalSize: return "RaysUnequalSize";
    case ErrorCode::HeightTooSmall: return "HeightTooSmall";
    case ErrorCode::RayNotClique: return "RayNotClique";
    case ErrorCode::TrivialLocalGraph: return "TrivialLocalGraph";
    case ErrorCode::HeightMismatch: return "HeightMismatch";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::WrongRaySize: return "WrongRaySize";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::CollapsedSpan: return "CollapsedSpan";
    case ErrorCode::PointGraphMismatch: return "PointGraphMismatch";
    case ErrorCode::InconsistentCrossEdges: return "InconsistentCrossEdges";
    case ErrorCode::NotPartialLinear: return "NotPartialLinear";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable code and the offending indices
/// (vertices, points or lines depending on the code).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }
  /// what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::vector<int> witness_;
};

}  // namespace lieprobe
