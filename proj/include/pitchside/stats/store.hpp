#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pitchside/common/clock.hpp"
#include "pitchside/common/datetime.hpp"

namespace pitchside::stats {

struct MatchRecord {
  std::string match_id;
  std::string home;
  std::string away;
  std::string league;
  std::string season;
  DateTime kickoff;
  int home_goals = 0;
  int away_goals = 0;

  bool operator==(const MatchRecord&) const = default;
};

enum class EventType { goal, assist, yellow_card, red_card, foul, corner, penalty_awarded, free_kick };

/// How a goal was scored. `open_play` covers every goal not tagged otherwise.
enum class GoalMethod { open_play, penalty, header, own_goal };

/// One row of the stat-events table. For goals `team` is the side credited
/// with the goal, so an own goal names the opponent of the scorer's club.
struct StatEvent {
  std::string match_id;
  MatchClock clock;
  EventType type = EventType::goal;
  std::string team;
  std::string player;  // empty for team-level events such as corners
  std::optional<GoalMethod> method;

  bool operator==(const StatEvent&) const = default;
};

struct PlayerBio {
  std::string name;
  std::string nationality;
  int height_cm = 0;
  std::string birthdate;  // YYYY-MM-DD

  bool operator==(const PlayerBio&) const = default;
};

std::string to_string(EventType t);
EventType parse_event_type(std::string_view s);
std::string to_string(GoalMethod m);
GoalMethod parse_goal_method(std::string_view s);

/// Immutable after construction; safe for concurrent readers.
class StatStore {
 public:
  StatStore() = default;
  /// Validates: unique match ids, events reference known matches, event
  /// teams play in their match, goal methods only on goals.
  StatStore(std::vector<MatchRecord> matches, std::vector<StatEvent> events,
            std::vector<PlayerBio> players);

  /// Reads matches.csv, stat_events.csv and players.csv (header rows required).
  static StatStore load(const std::filesystem::path& dir);

  const std::vector<MatchRecord>& matches() const noexcept { return matches_; }
  const std::vector<StatEvent>& events() const noexcept { return events_; }
  const std::vector<PlayerBio>& players() const noexcept { return players_; }

  const MatchRecord& match(std::string_view match_id) const;

 private:
  std::vector<MatchRecord> matches_;
  std::vector<StatEvent> events_;
  std::vector<PlayerBio> players_;
};

/// Exactly one players-table row whose folded name equals the folded query.
/// Throws UnknownEntity or DuplicateEntity.
const PlayerBio& player_background(const StatStore& store, std::string_view name);

}  // namespace pitchside::stats
