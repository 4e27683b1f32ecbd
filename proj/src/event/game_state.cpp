#include "pitchside/event/game_state.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pitchside/common/error.hpp"

namespace pitchside::event {

namespace {

std::string describe(const PlayerRef& p) {
  return p.name + " #" + std::to_string(p.number);
}

void require_in_lineup(const Lineup& lineup, const PlayerRef& p, Side side, const char* role) {
  if (!lineup.contains(p))
    fail(ErrorKind::ActorNotInLineup, std::string(role) + " " + describe(p) +
                                          " is not in the active " +
                                          std::string(to_string(side)) + " lineup");
}

void check_lineup(const Lineup& lineup, Side side) {
  const std::string who(to_string(side));
  if (lineup.players.size() != kLineupSize)
    fail(ErrorKind::InvalidInput, who + " lineup has " + std::to_string(lineup.players.size()) +
                                      " players, expected 11");
  std::set<int> numbers;
  std::set<std::string> names;
  for (const auto& p : lineup.players) {
    if (p.name.empty()) fail(ErrorKind::InvalidInput, who + " lineup has an unnamed player");
    if (p.number < 1 || p.number > 99)
      fail(ErrorKind::InvalidInput, who + " lineup: jersey number out of range for " + p.name);
    if (!numbers.insert(p.number).second)
      fail(ErrorKind::InvalidInput, who + " lineup: duplicate number " + std::to_string(p.number));
    if (!names.insert(p.name).second)
      fail(ErrorKind::InvalidInput, who + " lineup: duplicate player " + p.name);
  }
}

}  // namespace

GameState GameState::initial(const MatchLog& log, std::size_t history_k) {
  GameState s;
  s.lineup_home = log.home;
  s.lineup_away = log.away;
  s.history_capacity = history_k;
  return s;
}

GameState apply_event(const GameState& state, const MatchEvent& event) {
  if (!event.clock.valid())
    fail(ErrorKind::InvalidInput, "event clock out of range: " + format_game_time(event.clock));
  if (event.clock < state.clock)
    fail(ErrorKind::ClockRegression, "event at " + format_game_time(event.clock) +
                                         " precedes state clock " +
                                         format_game_time(state.clock));

  GameState next = state;
  next.clock = event.clock;
  Lineup& own = event.team == Side::home ? next.lineup_home : next.lineup_away;

  if (event.kind == EventKind::substitution) {
    if (!event.incoming || !event.outgoing)
      fail(ErrorKind::InvalidInput, "substitution needs both incoming and outgoing players");
    const auto& out = *event.outgoing;
    const auto& in = *event.incoming;
    if (!own.contains(out))
      fail(ErrorKind::SubstitutionViolation, "outgoing player " + describe(out) + " is not active");
    if (next.lineup_home.contains(in) || next.lineup_away.contains(in))
      fail(ErrorKind::SubstitutionViolation, "incoming player " + describe(in) + " is already active");
    for (const auto& p : own.players)
      if (p.number == in.number && !(p == out))
        fail(ErrorKind::SubstitutionViolation,
             "incoming player " + describe(in) + " duplicates an active jersey number");
    std::replace(own.players.begin(), own.players.end(), out, in);
    return next;
  }

  if (is_goal_kind(event.kind) && !event.actor)
    fail(ErrorKind::InvalidInput, std::string(to_string(event.kind)) + " without a scorer");
  if (event.actor) require_in_lineup(own, *event.actor, event.team, "actor");
  if (event.assist) require_in_lineup(own, *event.assist, event.team, "assist");

  if (is_goal_kind(event.kind)) {
    if (credited_side(event.kind, event.team) == Side::home)
      ++next.score_home;
    else
      ++next.score_away;
  }
  if (is_key_kind(event.kind)) next.key_events.push_back(event);

  if (event.kind == EventKind::commentary && next.history_capacity > 0) {
    next.history_events.push_back(event);
    if (next.history_events.size() > next.history_capacity)
      next.history_events.erase(next.history_events.begin(),
                                next.history_events.end() -
                                    static_cast<std::ptrdiff_t>(next.history_capacity));
  }
  return next;
}

GameState replay(const MatchLog& log, MatchClock at, const ReplayOptions& options) {
  if (!at.valid()) fail(ErrorKind::InvalidInput, "replay clock out of range");
  GameState state = GameState::initial(log, options.history_k);
  for (std::size_t i = 0; i < log.events.size(); ++i) {
    const auto& e = log.events[i];
    const bool visible = options.inclusive ? e.clock <= at : e.clock < at;
    if (!visible) break;
    try {
      state = apply_event(state, e);
    } catch (const Error& err) {
      throw Error(err.kind(), "event #" + std::to_string(i) + ": " + err.what(), i);
    }
  }
  state.clock = at;
  return state;
}

GameState replay_prefix(const MatchLog& log, std::size_t count, std::size_t history_k) {
  if (count > log.events.size()) fail(ErrorKind::InvalidInput, "prefix longer than the event log");
  GameState state = GameState::initial(log, history_k);
  for (std::size_t i = 0; i < count; ++i) {
    try {
      state = apply_event(state, log.events[i]);
    } catch (const Error& err) {
      throw Error(err.kind(), "event #" + std::to_string(i) + ": " + err.what(), i);
    }
  }
  return state;
}

void validate_log(const MatchLog& log) {
  const auto& m = log.meta;
  if (m.home.empty() || m.away.empty()) fail(ErrorKind::InvalidInput, "team names must be set");
  if (m.home == m.away) fail(ErrorKind::InvalidInput, "home and away teams must differ");
  m.kickoff_time();  // throws ParseError

  check_lineup(log.home, Side::home);
  check_lineup(log.away, Side::away);

  for (std::size_t i = 0; i < log.events.size(); ++i) {
    const auto& e = log.events[i];
    if (!e.clock.valid())
      fail(ErrorKind::InvalidInput, "event #" + std::to_string(i) + " has an invalid clock", i);
    if (i > 0 && e.clock < log.events[i - 1].clock)
      fail(ErrorKind::InvalidInput, "event #" + std::to_string(i) + " is out of clock order", i);
  }
  replay_prefix(log, log.events.size());
}

}  // namespace pitchside::event
