#pragma once

#include <cstddef>
#include <vector>

#include "pitchside/event/types.hpp"

namespace pitchside::event {

inline constexpr std::size_t kLineupSize = 11;
inline constexpr std::size_t kDefaultHistoryK = 1;

/// Match context at an instant: scores, active lineups, the key-event
/// timeline (goals and cards) and the latest `history_capacity` commentary
/// events. Plain value; copies are independent snapshots.
struct GameState {
  int score_home = 0;
  int score_away = 0;
  Lineup lineup_home;
  Lineup lineup_away;
  std::vector<MatchEvent> key_events;
  std::vector<MatchEvent> history_events;  // oldest first
  MatchClock clock = MatchClock::kickoff();
  std::size_t history_capacity = kDefaultHistoryK;

  static GameState initial(const MatchLog& log, std::size_t history_k = kDefaultHistoryK);

  int score(Side s) const { return s == Side::home ? score_home : score_away; }
  const Lineup& lineup(Side s) const { return s == Side::home ? lineup_home : lineup_away; }

  bool operator==(const GameState&) const = default;
};

/// Applies one event and returns the successor state. The input is not
/// modified. Throws ClockRegression, ActorNotInLineup, SubstitutionViolation
/// or InvalidInput (malformed event).
GameState apply_event(const GameState& state, const MatchEvent& event);

struct ReplayOptions {
  std::size_t history_k = kDefaultHistoryK;
  /// false: events strictly before `at` are folded in (the default).
  /// true: events at exactly `at` are included too.
  bool inclusive = false;
};

/// Folds apply_event over the log's events up to `at`. The returned state's
/// clock is `at`. Errors carry the offending event index.
GameState replay(const MatchLog& log, MatchClock at, const ReplayOptions& options = {});

/// Folds the first `count` events. The returned clock is that of the last
/// applied event (kickoff when `count` is zero).
GameState replay_prefix(const MatchLog& log, std::size_t count,
                        std::size_t history_k = kDefaultHistoryK);

/// Structural checks (metadata, lineups, event ordering and shape) followed by
/// a full replay so that every referenced player is checked against the
/// active lineup at that moment.
void validate_log(const MatchLog& log);

}  // namespace pitchside::event
