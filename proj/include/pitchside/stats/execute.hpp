#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pitchside/stats/query.hpp"
#include "pitchside/stats/store.hpp"

namespace pitchside::stats {

struct MatchSummary {
  std::string match_id;
  DateTime kickoff;
  std::string home;
  std::string away;
  int home_goals = 0;
  int away_goals = 0;

  bool operator==(const MatchSummary&) const = default;
};

struct TeamRecord {
  int wins = 0;
  int draws = 0;
  int losses = 0;
  int goals_for = 0;
  int goals_against = 0;

  int played() const noexcept { return wins + draws + losses; }
  bool operator==(const TeamRecord&) const = default;
};

/// A match whose data the answer used, with how much it contributed
/// (event count for counts, 1 for listed or recorded matches).
struct Provenance {
  std::string match_id;
  DateTime kickoff;
  long contribution = 0;

  bool operator==(const Provenance&) const = default;
};

using StatValue = std::variant<long, std::vector<MatchSummary>, TeamRecord>;

struct StatAnswer {
  StatValue value;
  std::vector<Provenance> provenance;  // ascending by (kickoff, match_id)

  bool operator==(const StatAnswer&) const = default;
};

/// Only matches with kickoff strictly before q.as_of are visible; season and
/// league filters are exact; names compare after NFC and case folding.
/// Counts without a METHOD clause exclude own goals from a player's tally;
/// METHOD any includes them. Lists and records are ordered by kickoff, last-n
/// results newest first.
///
/// Throws UnsupportedStat for out-of-schema stats and UnknownEntity when
/// matches are visible but the subject appears in none of them (players may
/// also be found in the players table).
StatAnswer execute(const StatStore& store, const StatQuery& q);

struct AnsweredQuery {
  StatQuery query;
  StatAnswer answer;
};

struct AnswerValidation {
  std::vector<AnsweredQuery> kept;
  std::vector<AnsweredQuery> discarded;
};

/// Drops repeats (same printed query and same answer) and any answer citing a
/// match whose kickoff is at or after `match_kickoff`. Order is preserved.
AnswerValidation validate_answers(const std::vector<AnsweredQuery>& answers,
                                  DateTime match_kickoff);

/// One-line human rendering of an answered query.
std::string render_answer(const AnsweredQuery& a);

nlohmann::json to_json(const StatAnswer& a);
nlohmann::json to_json(const PlayerBio& p);

}  // namespace pitchside::stats
