#include "pitchside/event/curation.hpp"

#include <algorithm>
#include <cstdlib>

#include "pitchside/common/error.hpp"
#include "pitchside/common/text.hpp"

namespace pitchside::event {

namespace {

/// Everyone who can appear for a side: starters plus anyone subbed on.
std::vector<PlayerRef> roster(const MatchLog& log, Side side) {
  std::vector<PlayerRef> out = log.lineup(side).players;
  for (const auto& e : log.events)
    if (e.kind == EventKind::substitution && e.team == side && e.incoming &&
        std::find(out.begin(), out.end(), *e.incoming) == out.end())
      out.push_back(*e.incoming);
  return out;
}

PlayerRef resolve_scorer(const MatchLog& log, Side scorer_side, const std::string& name) {
  const auto wanted = fold_name(name);
  for (const auto& p : roster(log, scorer_side))
    if (fold_name(p.name) == wanted) return p;
  fail(ErrorKind::ActorNotInLineup,
       "secondary scorer '" + name + "' is not on the " + std::string(to_string(scorer_side)) +
           " roster");
}

}  // namespace

ReconcileResult reconcile_goal_timelines(const MatchLog& primary,
                                         const SecondaryTimeline& secondary,
                                         const ReconcileOptions& options) {
  if (fold_name(primary.meta.home) != fold_name(secondary.home) ||
      fold_name(primary.meta.away) != fold_name(secondary.away))
    fail(ErrorKind::FixtureMismatch, "secondary timeline is for " + secondary.home + " vs " +
                                         secondary.away);
  if (primary.meta.kickoff_time() != parse_iso8601(secondary.kickoff))
    fail(ErrorKind::FixtureMismatch, "kickoff times differ");
  if (options.window_s < 0) fail(ErrorKind::InvalidInput, "match window must be non-negative");

  std::vector<std::size_t> goal_idx;
  for (std::size_t i = 0; i < primary.events.size(); ++i)
    if (is_goal_kind(primary.events[i].kind)) goal_idx.push_back(i);
  std::vector<bool> used(goal_idx.size(), false);

  for (const auto& g : secondary.goals) {
    if (!g.clock.valid()) fail(ErrorKind::InvalidInput, "secondary goal clock out of range");
    if (!is_goal_kind(g.kind)) fail(ErrorKind::InvalidInput, "secondary entry is not a goal");
  }

  // Exact agreements (clock, kind, side, scorer) are paired first so that the
  // window pass cannot steal them for a neighbouring goal.
  std::vector<bool> matched(secondary.goals.size(), false);
  for (std::size_t s = 0; s < secondary.goals.size(); ++s) {
    const auto& g = secondary.goals[s];
    for (std::size_t j = 0; j < goal_idx.size(); ++j) {
      const auto& e = primary.events[goal_idx[j]];
      if (used[j] || e.clock != g.clock || e.kind != g.kind || credited_side(e.kind, e.team) != g.team)
        continue;
      if (g.actor && (!e.actor || fold_name(e.actor->name) != fold_name(*g.actor))) continue;
      used[j] = matched[s] = true;
      break;
    }
  }

  std::vector<MatchEvent> to_add;
  for (std::size_t s = 0; s < secondary.goals.size(); ++s) {
    if (matched[s]) continue;
    const auto& g = secondary.goals[s];
    std::optional<std::size_t> best;
    int best_gap = 0;
    for (std::size_t j = 0; j < goal_idx.size(); ++j) {
      if (used[j]) continue;
      const auto& e = primary.events[goal_idx[j]];
      if (credited_side(e.kind, e.team) != g.team || e.clock.half != g.clock.half) continue;
      const int gap = std::abs(e.clock.offset_s - g.clock.offset_s);
      if (gap > options.window_s) continue;
      if (!best || gap < best_gap) {
        best = j;
        best_gap = gap;
      }
    }
    if (best) {
      used[*best] = true;
      continue;
    }

    MatchEvent added;
    added.clock = g.clock;
    added.kind = g.kind;
    added.team = g.kind == EventKind::own_goal ? opponent(g.team) : g.team;
    if (!g.actor)
      fail(ErrorKind::InvalidInput, "secondary goal at " + format_game_time(g.clock) +
                                        " has no scorer to insert");
    added.actor = resolve_scorer(primary, added.team, *g.actor);
    to_add.push_back(std::move(added));
  }

  std::stable_sort(to_add.begin(), to_add.end(),
                   [](const MatchEvent& a, const MatchEvent& b) { return a.clock < b.clock; });

  ReconcileResult result{primary, {}};
  auto& events = result.log.events;
  for (auto& e : to_add) {
    auto pos = std::upper_bound(events.begin(), events.end(), e.clock,
                                [](const MatchClock& c, const MatchEvent& x) { return c < x.clock; });
    events.insert(pos, std::move(e));
  }
  // positions are recovered afterwards so they refer to the final layout
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < events.size() && result.report.added < to_add.size(); ++i) {
    if (cursor < primary.events.size() && events[i] == primary.events[cursor]) {
      ++cursor;
      continue;
    }
    result.report.positions.push_back(i);
    ++result.report.added;
  }
  return result;
}

EntityFilterResult filter_single_entity(const MatchLog& log) {
  EntityFilterResult out;
  for (const auto& e : log.events) {
    if (e.kind != EventKind::commentary) continue;
    const std::string_view body = e.detail ? std::string_view(*e.detail) : std::string_view();
    const bool single = count_occurrences(body, "[PLAYER]") == 1 &&
                        count_occurrences(body, "[COACH]") == 0 &&
                        count_occurrences(body, "[REFEREE]") == 0;
    if (single)
      out.kept.push_back(e);
    else
      ++out.dropped;
  }
  return out;
}

}  // namespace pitchside::event
