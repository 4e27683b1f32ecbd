#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pitchside/event/types.hpp"

namespace pitchside::stats {
class StatStore;
}

namespace pitchside::eval {

/// Event families that count claims refer to.
enum class EventClass { goal, yellow_card, red_card, card, corner, foul, free_kick, penalty,
                        substitution, offside };

std::string_view to_string(EventClass c) noexcept;

/// Who a count is about: the whole match, one side, or one named player.
struct CountScope {
  enum class Kind { match, team, player } kind = Kind::match;
  std::optional<event::Side> side;  // team scope
  std::string player;               // player scope
  bool operator==(const CountScope&) const = default;
};

struct ScorelinePayload {
  int first = 0;
  int second = 0;
  bool operator==(const ScorelinePayload&) const = default;
};

/// "their fifth corner" (ordinal) or "three yellow cards already" (cardinal).
struct CountPayload {
  int value = 0;
  bool cardinal = false;
  EventClass event = EventClass::goal;
  CountScope scope;
  bool operator==(const CountPayload&) const = default;
};

/// A statistic stated in the commentary, supplied as a structured annotation.
struct ExternalStatPayload {
  std::string dsl;
  nlohmann::json claimed;
  bool operator==(const ExternalStatPayload&) const = default;
};

enum class ClaimKind { scoreline, ordinal_event_count, external_stat };

std::string_view to_string(ClaimKind k) noexcept;

struct Claim {
  ClaimKind kind = ClaimKind::scoreline;
  std::variant<ScorelinePayload, CountPayload, ExternalStatPayload> payload;
  std::size_t span_begin = 0;  // byte range in the commentary body
  std::size_t span_end = 0;
  std::string span_text;
  bool operator==(const Claim&) const = default;
};

/// What the commentary is about: its clock, and the acting side and player
/// when known. `log` supplies team and player names.
struct ClaimContext {
  const event::MatchLog* log = nullptr;
  MatchClock clock;
  std::optional<event::Side> team;
  std::optional<std::string> actor;
};

/// Rule-based extraction of scorelines ("d-d" in a sentence with score
/// vocabulary) and event counts (ordinals "first".."tenth" and "forth" next
/// to an event noun or "of the match", and cardinals next to an event noun in
/// a sentence that says "already", "so far" or "this match"). Sentences that
/// mention a season are left alone, since their counts are external.
std::vector<Claim> extract_claims(std::string_view body, const ClaimContext& context);

/// Wraps an annotation {dsl, claimed, span?} as a claim.
Claim external_stat_claim(std::string dsl, nlohmann::json claimed, std::string span_text = {});

enum class VerdictStatus { supported, contradicted, unverifiable };

std::string_view to_string(VerdictStatus s) noexcept;

struct Verdict {
  VerdictStatus status = VerdictStatus::unverifiable;
  nlohmann::json expected;
  nlohmann::json claimed;
  std::string note;
};

struct VerifyOptions {
  bool strict_scoreline = false;  // reject the away-home orientation
};

/// Checks each claim against the log replayed to `clock` with the current
/// event included, and external statistics against `store` (unverifiable
/// when no store is given or the statistic is outside the schema). Never
/// throws for a claim; problems become unverifiable verdicts.
std::vector<Verdict> verify_claims(std::span<const Claim> claims, const event::MatchLog& log,
                                   MatchClock clock, const stats::StatStore* store,
                                   const VerifyOptions& options = {});

/// Scorelines and goal counts belong to ICL_goal; everything else to ICL_other.
bool is_goal_claim(const Claim& c);

struct VerdictTally {
  std::size_t supported = 0;
  std::size_t contradicted = 0;
  std::size_t unverifiable = 0;
  std::size_t total() const { return supported + contradicted + unverifiable; }
  /// supported / total as a percentage; nullopt when there are no claims.
  std::optional<double> accuracy() const;
};

struct VerificationSummary {
  VerdictTally icl_goal;
  VerdictTally icl_other;
};

VerificationSummary summarize(std::span<const Claim> claims, std::span<const Verdict> verdicts);

nlohmann::json to_json(const Claim& c);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const VerificationSummary& s);

}  // namespace pitchside::eval
