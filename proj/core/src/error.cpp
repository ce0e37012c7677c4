#include "dilink/error.hpp"

namespace dilink {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotOriented: return "NotOriented";
    case ErrorCode::TooLargeForExact: return "TooLargeForExact";
    case ErrorCode::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::DegenerateLadder: return "DegenerateLadder";
    case ErrorCode::NotEmbedded: return "NotEmbedded";
    case ErrorCode::PathNotDisjoint: return "PathNotDisjoint";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::CoverConstructionFailed: return "CoverConstructionFailed";
    case ErrorCode::ConnectionFailed: return "ConnectionFailed";
    case ErrorCode::LadderConstructionFailed: return "LadderConstructionFailed";
    case ErrorCode::AbsorberConstructionFailed: return "AbsorberConstructionFailed";
    case ErrorCode::TooManyPaths: return "TooManyPaths";
    case ErrorCode::NoCoveringPair: return "NoCoveringPair";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::CycleNotFound: return "CycleNotFound";
    case ErrorCode::SizesExceedCycle: return "SizesExceedCycle";
    case ErrorCode::PipelineFailed: return "PipelineFailed";
    case ErrorCode::OrdersDontSumToN: return "OrdersDontSumToN";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(PipelineStage stage) {
  switch (stage) {
    case PipelineStage::Precondition: return "precondition";
    case PipelineStage::Feasibility: return "feasibility";
    case PipelineStage::Absorber: return "absorber";
    case PipelineStage::Cycle: return "cycle";
    case PipelineStage::Segments: return "segments";
    case PipelineStage::Absorption: return "absorption";
    case PipelineStage::Validation: return "validation";
  }
  return "unknown";
}

}  // namespace dilink
