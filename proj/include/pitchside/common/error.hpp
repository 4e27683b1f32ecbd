#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pitchside {

enum class ErrorKind {
  // generic input problems
  InvalidInput,
  ParseError,
  // event-core
  SubstitutionViolation,
  ClockRegression,
  ActorNotInLineup,
  FixtureMismatch,
  // grounding
  DimensionMismatch,
  AllZeroNorms,
  // scene-analysis
  EmptySequence,
  CandidateNotInLineup,
  LengthMismatch,
  // statbase
  SyntaxError,
  MissingBefore,
  UnknownEntity,
  UnsupportedStat,
  DuplicateEntity,
  // pipeline
  UnresolvedPlaceholder,
  MalformedResponse,
  UnknownOption,
  PredictionNotInLineup,
  WrongQuestionCount,
  ClientError,
  DigestCollision,
  // evalkit
  EmptyInput,
  UnlabeledSentence,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Every module reports failures through this type. `index` carries the
/// offending element position when an error is raised while folding over a
/// sequence (event index during replay, byte offset during query parsing).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message,
                       std::optional<std::size_t> index = std::nullopt);

}  // namespace pitchside
