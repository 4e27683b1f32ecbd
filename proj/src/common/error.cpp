#include "pitchside/common/error.hpp"

namespace pitchside {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SubstitutionViolation: return "SubstitutionViolation";
    case ErrorKind::ClockRegression: return "ClockRegression";
    case ErrorKind::ActorNotInLineup: return "ActorNotInLineup";
    case ErrorKind::FixtureMismatch: return "FixtureMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AllZeroNorms: return "AllZeroNorms";
    case ErrorKind::EmptySequence: return "EmptySequence";
    case ErrorKind::CandidateNotInLineup: return "CandidateNotInLineup";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::MissingBefore: return "MissingBefore";
    case ErrorKind::UnknownEntity: return "UnknownEntity";
    case ErrorKind::UnsupportedStat: return "UnsupportedStat";
    case ErrorKind::DuplicateEntity: return "DuplicateEntity";
    case ErrorKind::UnresolvedPlaceholder: return "UnresolvedPlaceholder";
    case ErrorKind::MalformedResponse: return "MalformedResponse";
    case ErrorKind::UnknownOption: return "UnknownOption";
    case ErrorKind::PredictionNotInLineup: return "PredictionNotInLineup";
    case ErrorKind::WrongQuestionCount: return "WrongQuestionCount";
    case ErrorKind::ClientError: return "ClientError";
    case ErrorKind::DigestCollision: return "DigestCollision";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::UnlabeledSentence: return "UnlabeledSentence";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(message), kind_(kind), index_(index) {}

void fail(ErrorKind kind, const std::string& message,
          std::optional<std::size_t> index) {
  throw Error(kind, message, index);
}

}  // namespace pitchside
