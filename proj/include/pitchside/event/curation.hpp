#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pitchside/event/types.hpp"

namespace pitchside::event {

/// A goal as listed by an independent results source. `team` is the side the
/// goal is credited to (for an own goal, the scorer's opponent).
struct SecondaryGoal {
  MatchClock clock;
  Side team = Side::home;
  std::optional<std::string> actor;
  EventKind kind = EventKind::goal;
};

struct SecondaryTimeline {
  std::string home;
  std::string away;
  std::string kickoff;
  std::vector<SecondaryGoal> goals;
};

struct ReconcileOptions {
  int window_s = 60;
};

struct ReconcileReport {
  std::size_t added = 0;
  /// Indices of the inserted events in the merged log, ascending.
  std::vector<std::size_t> positions;
};

struct ReconcileResult {
  MatchLog log;
  ReconcileReport report;
};

/// Inserts goals that the secondary source lists but the primary log lacks.
/// Matching is one-to-one. Exact agreements (clock, kind, credited side and
/// scorer) pair first; each remaining secondary goal then takes the nearest
/// unmatched primary goal credited to the same side, in the same half, within
/// `window_s` seconds;
/// unmatched secondary goals are inserted after any events sharing their
/// clock. Existing events are never removed or changed.
/// Throws FixtureMismatch, or ActorNotInLineup when a scorer name cannot be
/// found in the team's roster.
ReconcileResult reconcile_goal_timelines(const MatchLog& primary,
                                         const SecondaryTimeline& secondary,
                                         const ReconcileOptions& options = {});

struct EntityFilterResult {
  std::vector<MatchEvent> kept;
  std::size_t dropped = 0;
};

/// Keeps commentary whose body names exactly one [PLAYER] and no [COACH] or
/// [REFEREE]. Non-commentary events are ignored (neither kept nor counted).
EntityFilterResult filter_single_entity(const MatchLog& log);

}  // namespace pitchside::event
