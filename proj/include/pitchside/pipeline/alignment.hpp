#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pitchside/event/game_state.hpp"
#include "pitchside/grounding/attention.hpp"
#include "pitchside/pipeline/commentary.hpp"
#include "pitchside/scene/report.hpp"

namespace pitchside {
class Client;
}

namespace pitchside::pipeline {

enum class QueryVariant { team_query, player_query, player_query_given_team };
/// json: reasoning then a JSON block; tagged: <think>..</think><answer>X</answer>
/// with X a letter from the option list.
enum class AnswerFormat { json, tagged };

std::string_view to_string(QueryVariant v) noexcept;
std::string_view to_string(AnswerFormat f) noexcept;
AnswerFormat parse_answer_format(std::string_view s);

/// Opaque 8-hex-digit identifier of a rostered player, stable across runs.
std::string player_hash(std::string_view team, const event::PlayerRef& player);

/// One selectable answer. `key` is the player hash, or the team name for
/// team queries.
struct AlignmentOption {
  std::string key;
  event::Side side = event::Side::home;
  std::optional<event::PlayerRef> player;
};

/// The 22 players on the pitch, home lineup first, each in lineup order.
std::vector<AlignmentOption> player_options(const event::MatchMeta& meta,
                                            const event::GameState& state);
/// Home team then away team.
std::vector<AlignmentOption> team_options(const event::MatchMeta& meta);

struct AssembleOptions {
  std::optional<event::Side> given_team;  // required by player_query_given_team
  AnswerFormat format = AnswerFormat::json;
  double relevance_fps = 1.0;  // frame rate of the attention frames
};

struct AlignmentPrompt {
  QueryVariant variant = QueryVariant::player_query;
  std::string text;
  std::vector<AlignmentOption> options;
};

/// Renders the Stage I prompt. Team colours come from the scene's resolved
/// colours when present, else from the match metadata. The key-event
/// timeline is never included; the history timeline is whatever the state
/// retains (k=1 by default). Throws UnresolvedPlaceholder.
AlignmentPrompt assemble_context(const event::MatchMeta& meta, const event::GameState& state,
                                 const scene::SceneReport& scene,
                                 const grounding::FrameRelevance& relevance, const Commentary& c_a,
                                 QueryVariant variant, const AssembleOptions& options = {});

/// A raw answer and, when it names an option, that option's position.
struct RankedAnswer {
  std::string raw;
  std::optional<std::size_t> choice;
  bool operator==(const RankedAnswer&) const = default;
};

struct GroundingSpan {
  double start_s = 0.0;
  double end_s = 0.0;
  bool operator==(const GroundingSpan&) const = default;
};

struct AlignmentAnswer {
  RankedAnswer top1;
  std::vector<RankedAnswer> top3;  // empty unless the response ranked answers
  std::optional<GroundingSpan> grounding;
  bool operator==(const AlignmentAnswer&) const = default;
};

/// Reads the first well-formed answer block in `response`: either a JSON
/// object with a string "answer" (optional "grounding" as seconds or
/// [start, end], optional "top3" list), or <answer>X</answer>. Letters A..
/// index `options`; other answers resolve by exact key match, case-folded.
/// Throws InvalidInput unless there are 2 or 22 options, MalformedResponse
/// when no block is found and UnknownOption for an out-of-range letter.
AlignmentAnswer parse_alignment(std::string_view response, std::span<const std::string> options);

struct StageOneInputs {
  std::string segment_id;
  const event::MatchLog* log = nullptr;
  scene::SceneReport scene;
  grounding::FrameRelevance relevance;
  Commentary c_a;
  std::string video;  // reference passed through to the reasoner
  AssembleOptions assemble;
  std::size_t history_k = event::kDefaultHistoryK;
};

struct StageOneResult {
  Commentary c_ea;
  QueryVariant variant = QueryVariant::player_query;
  event::Side team = event::Side::home;
  std::optional<event::PlayerRef> player;
  std::vector<std::string> top3;  // names (players) or team names, top-1 first
  std::optional<GroundingSpan> grounding;
  std::string request_digest;
};

/// Stage I for one segment: replays the log to the commentary clock
/// (exclusive), renders the prompt, queries `client` and substitutes
/// [PLAYER] and [TEAM]. A predicted player who is not on the pitch raises
/// PredictionNotInLineup. Errors keep their kind and name the segment.
StageOneResult run_stage1(const StageOneInputs& inputs, Client& client);

nlohmann::json to_json(const StageOneResult& r);

}  // namespace pitchside::pipeline
