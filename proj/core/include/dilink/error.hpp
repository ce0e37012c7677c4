#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dilink {

enum class ErrorCode {
  LoopArc,
  LabelOutOfRange,
  BadParameter,
  TooSmall,
  NotOriented,
  TooLargeForExact,
  TooLargeForOracle,
  DegenerateLadder,
  NotEmbedded,
  PathNotDisjoint,
  EndpointMismatch,
  CoverConstructionFailed,
  ConnectionFailed,
  LadderConstructionFailed,
  AbsorberConstructionFailed,
  TooManyPaths,
  NoCoveringPair,
  NotDisjoint,
  CycleNotFound,
  SizesExceedCycle,
  PipelineFailed,
  OrdersDontSumToN,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `index()` carries the offending
// request/path index for the codes that name one (ConnectionFailed,
// LadderConstructionFailed, NoCoveringPair).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

// CycleNotFound. `exhaustive()` is true when an exact search ran to
// completion, i.e. the cycle provably does not exist.
class CycleNotFoundError : public Error {
 public:
  CycleNotFoundError(const std::string& what, bool exhaustive)
      : Error(ErrorCode::CycleNotFound, what), exhaustive_(exhaustive) {}
  bool exhaustive() const noexcept { return exhaustive_; }

 private:
  bool exhaustive_;
};

enum class PipelineStage {
  Precondition,
  Feasibility,
  Absorber,
  Cycle,
  Segments,
  Absorption,
  Validation,
};

std::string_view to_string(PipelineStage stage);

class PipelineError : public Error {
 public:
  PipelineError(PipelineStage stage, const std::string& what)
      : Error(ErrorCode::PipelineFailed, std::string(to_string(stage)) + ": " + what), stage_(stage) {}
  PipelineStage stage() const noexcept { return stage_; }

 private:
  PipelineStage stage_;
};

}  // namespace dilink
