#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pitchside/common/clock.hpp"
#include "pitchside/common/datetime.hpp"

namespace pitchside::event {

enum class Position { goalkeeper, defender, midfielder, forward };

struct PlayerRef {
  std::string name;
  int number = 0;
  Position position = Position::midfielder;

  bool operator==(const PlayerRef&) const = default;
};

enum class Side { home, away };

constexpr Side opponent(Side s) noexcept { return s == Side::home ? Side::away : Side::home; }

struct TeamSide {
  Side side = Side::home;
  std::string team_name;
  std::string jersey_color;
};

enum class EventKind {
  goal,
  own_goal,
  penalty_goal,
  header_goal,
  yellow_card,
  red_card,
  substitution,
  corner,
  foul,
  free_kick,
  penalty_awarded,
  offside,
  commentary,
};

constexpr bool is_goal_kind(EventKind k) noexcept {
  return k == EventKind::goal || k == EventKind::own_goal || k == EventKind::penalty_goal ||
         k == EventKind::header_goal;
}
constexpr bool is_card_kind(EventKind k) noexcept {
  return k == EventKind::yellow_card || k == EventKind::red_card;
}
constexpr bool is_key_kind(EventKind k) noexcept { return is_goal_kind(k) || is_card_kind(k); }

/// Side whose score a goal-kind event increments.
constexpr Side credited_side(EventKind k, Side team) noexcept {
  return k == EventKind::own_goal ? opponent(team) : team;
}

struct MatchEvent {
  MatchClock clock;
  EventKind kind = EventKind::commentary;
  Side team = Side::home;
  std::optional<PlayerRef> actor;
  // substitution pair
  std::optional<PlayerRef> incoming;
  std::optional<PlayerRef> outgoing;
  std::optional<PlayerRef> assist;
  std::optional<std::string> detail;

  bool operator==(const MatchEvent&) const = default;
};

struct Lineup {
  std::vector<PlayerRef> players;
  std::string coach;

  bool contains(const PlayerRef& p) const;
  const PlayerRef* find_by_name(std::string_view name) const;

  bool operator==(const Lineup&) const = default;
};

struct MatchMeta {
  std::string home;
  std::string away;
  std::string league;
  std::string season;
  std::string kickoff;  // verbatim ISO-8601 text
  std::string home_color;
  std::string away_color;

  DateTime kickoff_time() const;
  const std::string& team_name(Side s) const { return s == Side::home ? home : away; }
  const std::string& color(Side s) const { return s == Side::home ? home_color : away_color; }
  TeamSide team_side(Side s) const { return {s, team_name(s), color(s)}; }

  bool operator==(const MatchMeta&) const = default;
};

struct MatchLog {
  MatchMeta meta;
  Lineup home;
  Lineup away;
  std::vector<MatchEvent> events;

  const Lineup& lineup(Side s) const { return s == Side::home ? home : away; }

  bool operator==(const MatchLog&) const = default;
};

std::string_view to_string(Position p) noexcept;
std::string_view to_string(Side s) noexcept;
std::string_view to_string(EventKind k) noexcept;

/// Throw ParseError on unknown labels.
Position parse_position(std::string_view s);
Side parse_side(std::string_view s);
EventKind parse_event_kind(std::string_view s);

}  // namespace pitchside::event
