#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pitchside/common/error.hpp"
#include "pitchside/event/types.hpp"
#include "pitchside/pipeline/commentary.hpp"
#include "pitchside/stats/execute.hpp"

namespace pitchside {
class Client;
}

namespace pitchside::pipeline {

inline constexpr std::size_t kQuestionCount = 4;

/// Asks the client for questions about external statistics. The reply must
/// hold a JSON block, either {"questions": [...]} or a bare list, of exactly
/// four strings. Throws MalformedResponse, WrongQuestionCount, ClientError.
std::vector<std::string> generate_questions(const Commentary& c_ea, const event::MatchMeta& meta,
                                            Client& client);

/// Translation, parse and execution of one question. A failure at any step is
/// recorded here rather than thrown.
struct QuestionOutcome {
  std::string question;
  std::string dsl;
  std::optional<stats::StatQuery> query;
  std::optional<stats::StatAnswer> answer;
  std::optional<ErrorKind> error_kind;
  std::string error;
};

struct ExternalKnowledge {
  std::vector<QuestionOutcome> outcomes;
  stats::AnswerValidation validation;
};

/// Questions, their DSL translations and answers, then validation against
/// the match kickoff. Only client failures are thrown.
ExternalKnowledge gather_external(const Commentary& c_ea, const event::MatchMeta& meta,
                                  const stats::StatStore& store, Client& client);

/// Internal match context at the commentary clock, current event included:
/// the score, the timeline of earlier events of the same type, the scorer,
/// assist and method for a goal, and the aligned player's background when the
/// store knows exactly one player of that name.
std::string internal_knowledge(const event::MatchLog& log, const Commentary& c_ea,
                               const std::optional<event::PlayerRef>& player,
                               const stats::StatStore* store);

/// One line per kept answer; empty when nothing survived validation.
std::string external_block(const std::vector<stats::AnsweredQuery>& kept);

/// Stage II: the refiner's text becomes the knowledge-enhanced commentary.
Commentary run_stage2(const Commentary& c_ea, const event::MatchMeta& meta,
                      const std::string& internal, const std::vector<stats::AnsweredQuery>& kept,
                      Client& client);

nlohmann::json to_json(const QuestionOutcome& q);

}  // namespace pitchside::pipeline
