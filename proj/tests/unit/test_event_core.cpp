#include <gtest/gtest.h>

#include <random>

#include "../support/match_gen.hpp"
#include "pitchside/common/error.hpp"
#include "pitchside/event/curation.hpp"
#include "pitchside/event/io.hpp"

using namespace pitchside;
using namespace pitchside::event;
using pitchside::testing::base_log;
using pitchside::testing::ev;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(ApplyEvent, AwayGoalIncrementsAway) {
  auto log = base_log();
  auto s0 = GameState::initial(log);
  auto s1 = apply_event(s0, ev({1, 600}, EventKind::goal, Side::away, log.away.players[9]));
  EXPECT_EQ(s1.score_home, 0);
  EXPECT_EQ(s1.score_away, 1);
  EXPECT_EQ(s1.key_events.size(), 1u);
  // input untouched
  EXPECT_EQ(s0.score_away, 0);
}

TEST(ApplyEvent, OwnGoalCreditsOpponent) {
  auto log = base_log();
  auto s = apply_event(GameState::initial(log),
                       ev({1, 600}, EventKind::own_goal, Side::away, log.away.players[3]));
  EXPECT_EQ(s.score_home, 1);
  EXPECT_EQ(s.score_away, 0);

  s = apply_event(s, ev({1, 700}, EventKind::own_goal, Side::home, log.home.players[3]));
  EXPECT_EQ(s.score_home, 1);
  EXPECT_EQ(s.score_away, 1);
}

TEST(ApplyEvent, GoalSubkindsScore) {
  auto log = base_log();
  auto s = GameState::initial(log);
  s = apply_event(s, ev({1, 10}, EventKind::penalty_goal, Side::home, log.home.players[9]));
  s = apply_event(s, ev({1, 20}, EventKind::header_goal, Side::home, log.home.players[8]));
  EXPECT_EQ(s.score_home, 2);
}

TEST(ApplyEvent, SubstitutionSwapsMembership) {
  auto log = base_log();
  auto sub = ev({2, 100}, EventKind::substitution, Side::home);
  sub.outgoing = log.home.players[10];
  sub.incoming = pitchside::testing::make_player(log.meta.home, 14);
  auto s = apply_event(GameState::initial(log), sub);
  EXPECT_FALSE(s.lineup_home.contains(*sub.outgoing));
  EXPECT_TRUE(s.lineup_home.contains(*sub.incoming));
  EXPECT_EQ(s.lineup_home.players.size(), 11u);
  EXPECT_TRUE(s.key_events.empty());
}

TEST(ApplyEvent, SubstitutionViolations) {
  auto log = base_log();
  auto s0 = GameState::initial(log);
  auto sub = ev({2, 100}, EventKind::substitution, Side::home);
  sub.outgoing = pitchside::testing::make_player(log.meta.home, 15);  // on the bench
  sub.incoming = pitchside::testing::make_player(log.meta.home, 14);
  EXPECT_EQ(kind_of([&] { apply_event(s0, sub); }), ErrorKind::SubstitutionViolation);

  sub.outgoing = log.home.players[0];
  sub.incoming = log.home.players[1];  // already active
  EXPECT_EQ(kind_of([&] { apply_event(s0, sub); }), ErrorKind::SubstitutionViolation);

  sub.incoming = PlayerRef{"New Guy", 5, Position::defender};  // number clash with #5
  EXPECT_EQ(kind_of([&] { apply_event(s0, sub); }), ErrorKind::SubstitutionViolation);
}

TEST(ApplyEvent, ClockRegressionAndActorChecks) {
  auto log = base_log();
  auto s = apply_event(GameState::initial(log), ev({2, 10}, EventKind::corner, Side::home));
  EXPECT_EQ(kind_of([&] { apply_event(s, ev({1, 3000}, EventKind::corner, Side::home)); }),
            ErrorKind::ClockRegression);
  // away player credited to the home side
  EXPECT_EQ(kind_of([&] {
              apply_event(s, ev({2, 20}, EventKind::goal, Side::home, log.away.players[9]));
            }),
            ErrorKind::ActorNotInLineup);
  EXPECT_EQ(kind_of([&] { apply_event(s, ev({2, 20}, EventKind::goal, Side::home)); }),
            ErrorKind::InvalidInput);
}

TEST(ApplyEvent, HistoryRotatesWithCapacity) {
  auto log = base_log();
  auto s = GameState::initial(log, 2);
  for (int i = 0; i < 4; ++i) {
    auto c = ev({1, 100 + i}, EventKind::commentary, Side::home);
    c.detail = "line " + std::to_string(i);
    s = apply_event(s, c);
  }
  ASSERT_EQ(s.history_events.size(), 2u);
  EXPECT_EQ(*s.history_events[0].detail, "line 2");
  EXPECT_EQ(*s.history_events[1].detail, "line 3");

  auto none = apply_event(GameState::initial(log, 0), ev({1, 1}, EventKind::commentary, Side::home));
  EXPECT_TRUE(none.history_events.empty());
}

TEST(Replay, EmptyStreamIsStartingState) {
  auto log = base_log();
  auto s = replay(log, MatchClock::full_time());
  EXPECT_EQ(s.score_home, 0);
  EXPECT_EQ(s.score_away, 0);
  EXPECT_EQ(s.lineup_home, log.home);
  EXPECT_EQ(s.lineup_away, log.away);
}

TEST(Replay, ThreeGoalsFullTime) {
  auto log = base_log();
  log.events = {ev({1, 300}, EventKind::goal, Side::home, log.home.players[9]),
                ev({1, 1500}, EventKind::goal, Side::away, log.away.players[9]),
                ev({2, 900}, EventKind::goal, Side::home, log.home.players[10])};
  auto s = replay(log, MatchClock::full_time());
  EXPECT_EQ(s.score_home, 2);
  EXPECT_EQ(s.score_away, 1);
  EXPECT_EQ(s.clock, MatchClock::full_time());

  auto k = replay(log, MatchClock::kickoff());
  EXPECT_EQ(k, GameState::initial(log));
}

TEST(Replay, StrictBeforeVersusInclusive) {
  auto log = base_log();
  log.events = {ev({1, 300}, EventKind::goal, Side::home, log.home.players[9])};
  EXPECT_EQ(replay(log, {1, 300}).score_home, 0);
  EXPECT_EQ(replay(log, {1, 300}, {.history_k = 1, .inclusive = true}).score_home, 1);
}

TEST(Replay, Deterministic) {
  std::mt19937_64 rng(7);
  auto log = pitchside::testing::random_log(rng);
  EXPECT_EQ(replay(log, MatchClock::full_time()), replay(log, MatchClock::full_time()));
}

TEST(Replay, ErrorsCarryEventIndex) {
  auto log = base_log();
  log.events = {ev({1, 10}, EventKind::corner, Side::home),
                ev({1, 20}, EventKind::goal, Side::home, log.away.players[2])};
  try {
    replay(log, MatchClock::full_time());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ActorNotInLineup);
    ASSERT_TRUE(e.index().has_value());
    EXPECT_EQ(*e.index(), 1u);
  }
}

TEST(Replay, PropertiesOnRandomLogs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    auto log = pitchside::testing::random_log(rng);
    ASSERT_NO_THROW(validate_log(log));
    std::pair<int, int> prev{0, 0};
    for (int half : {1, 2})
      for (int off = 0; off <= 3000; off += 250) {
        MatchClock at{half, off};
        auto s = replay(log, at);
        auto [h, a] = pitchside::testing::oracle_score(log, at);
        EXPECT_EQ(s.score_home, h);
        EXPECT_EQ(s.score_away, a);
        EXPECT_GE(s.score_home, prev.first);
        EXPECT_GE(s.score_away, prev.second);
        prev = {s.score_home, s.score_away};
        EXPECT_EQ(s.key_events, pitchside::testing::oracle_key_events(log, at));
        EXPECT_EQ(s.history_events, pitchside::testing::oracle_history(log, at, 1));
      }
  }
}

TEST(Validate, RejectsStructuralProblems) {
  auto log = base_log();
  log.home.players.pop_back();
  EXPECT_EQ(kind_of([&] { validate_log(log); }), ErrorKind::InvalidInput);

  log = base_log();
  log.meta.away = log.meta.home;
  EXPECT_EQ(kind_of([&] { validate_log(log); }), ErrorKind::InvalidInput);

  log = base_log();
  log.meta.kickoff = "yesterday";
  EXPECT_EQ(kind_of([&] { validate_log(log); }), ErrorKind::ParseError);

  log = base_log();
  log.events = {ev({1, 50}, EventKind::corner, Side::home), ev({1, 10}, EventKind::corner, Side::home)};
  EXPECT_EQ(kind_of([&] { validate_log(log); }), ErrorKind::InvalidInput);
}

// ---- reconciliation ----

namespace {

SecondaryTimeline timeline_of(const MatchLog& log) {
  SecondaryTimeline t{log.meta.home, log.meta.away, log.meta.kickoff, {}};
  for (const auto& e : log.events)
    if (is_goal_kind(e.kind))
      t.goals.push_back({e.clock, credited_side(e.kind, e.team), e.actor->name, e.kind});
  return t;
}

}  // namespace

TEST(Reconcile, RestoresMissingGoal) {
  auto full = base_log();
  full.events = {ev({1, 300}, EventKind::goal, Side::home, full.home.players[9]),
                 ev({1, 900}, EventKind::corner, Side::away),
                 ev({1, 1500}, EventKind::goal, Side::away, full.away.players[9]),
                 ev({2, 900}, EventKind::goal, Side::home, full.home.players[10])};
  auto primary = full;
  primary.events.erase(primary.events.begin() + 2);

  auto result = reconcile_goal_timelines(primary, timeline_of(full));
  EXPECT_EQ(result.report.added, 1u);
  ASSERT_EQ(result.report.positions.size(), 1u);
  EXPECT_EQ(result.report.positions[0], 2u);
  EXPECT_EQ(result.log.events, full.events);
}

TEST(Reconcile, IdenticalTimelinesAddNothing) {
  auto log = base_log();
  log.events = {ev({1, 300}, EventKind::goal, Side::home, log.home.players[9])};
  auto result = reconcile_goal_timelines(log, timeline_of(log));
  EXPECT_EQ(result.report.added, 0u);
  EXPECT_EQ(result.log, log);
}

TEST(Reconcile, ClockDriftWithinWindowMatches) {
  auto log = base_log();
  log.events = {ev({1, 300}, EventKind::goal, Side::home, log.home.players[9])};
  auto t = timeline_of(log);
  t.goals[0].clock.offset_s += 45;
  EXPECT_EQ(reconcile_goal_timelines(log, t).report.added, 0u);
  t.goals[0].clock.offset_s += 30;  // 75 s away now
  EXPECT_EQ(reconcile_goal_timelines(log, t).report.added, 1u);
  EXPECT_EQ(reconcile_goal_timelines(log, t, {.window_s = 90}).report.added, 0u);
}

TEST(Reconcile, SameClockOtherTeamIsAdded) {
  auto log = base_log();
  log.events = {ev({1, 300}, EventKind::goal, Side::home, log.home.players[9])};
  auto t = timeline_of(log);
  t.goals.push_back({{1, 300}, Side::away, log.away.players[9].name, EventKind::goal});
  auto result = reconcile_goal_timelines(log, t);
  EXPECT_EQ(result.report.added, 1u);
  EXPECT_EQ(result.report.positions, std::vector<std::size_t>{1});
  EXPECT_EQ(result.log.events[1].team, Side::away);
  EXPECT_EQ(replay(result.log, MatchClock::full_time()).score_away, 1);
}

TEST(Reconcile, OwnGoalIsMatchedByCreditedSide) {
  auto log = base_log();
  log.events = {ev({1, 300}, EventKind::own_goal, Side::away, log.away.players[3])};
  SecondaryTimeline t{log.meta.home, log.meta.away, log.meta.kickoff,
                      {{{1, 310}, Side::home, log.away.players[3].name, EventKind::own_goal}}};
  EXPECT_EQ(reconcile_goal_timelines(log, t).report.added, 0u);
}

TEST(Reconcile, ExactAgreementBeatsNearerWindowMatch) {
  auto full = base_log();
  full.events = {ev({1, 386}, EventKind::goal, Side::home, full.home.players[9]),
                 ev({1, 420}, EventKind::own_goal, Side::away, full.away.players[2])};
  auto primary = full;
  primary.events.erase(primary.events.begin());
  // the missing 1:386 goal lies within the window of the 1:420 own goal,
  // which the secondary source lists exactly
  auto result = reconcile_goal_timelines(primary, timeline_of(full));
  EXPECT_EQ(result.report.added, 1u);
  EXPECT_EQ(result.log.events, full.events);
}

TEST(Reconcile, FixtureMismatch) {
  auto log = base_log();
  auto t = timeline_of(log);
  t.home = "Someone Else";
  EXPECT_EQ(kind_of([&] { reconcile_goal_timelines(log, t); }), ErrorKind::FixtureMismatch);
  t = timeline_of(log);
  t.kickoff = "2016-11-23T19:45:00Z";
  EXPECT_EQ(kind_of([&] { reconcile_goal_timelines(log, t); }), ErrorKind::FixtureMismatch);
}

// ---- entity filtering ----

TEST(FilterSingleEntity, KeepsOnlySinglePlayerCommentary) {
  auto log = base_log();
  auto c = [](int off, const char* body) {
    auto e = ev({1, off}, EventKind::commentary, Side::home);
    e.detail = body;
    return e;
  };
  log.events = {c(10, "[PLAYER] scores"), c(20, "[PLAYER] passes to [PLAYER]"),
                c(30, "[REFEREE] warns [PLAYER]"), c(40, "[PLAYER] ([TEAM]) fires wide"),
                c(50, "[COACH] and [PLAYER] argue"), ev({1, 60}, EventKind::corner, Side::home)};
  auto r = filter_single_entity(log);
  ASSERT_EQ(r.kept.size(), 2u);
  EXPECT_EQ(*r.kept[0].detail, "[PLAYER] scores");
  EXPECT_EQ(*r.kept[1].detail, "[PLAYER] ([TEAM]) fires wide");
  EXPECT_EQ(r.dropped, 3u);
}

// ---- document I/O ----

TEST(MatchLogIo, RoundTripAndStrictness) {
  std::mt19937_64 rng(11);
  auto log = pitchside::testing::random_log(rng);
  auto doc = to_json(log);
  EXPECT_EQ(match_log_from_json(doc), log);

  doc["meta"]["venue"] = "Emirates";
  EXPECT_EQ(kind_of([&] { match_log_from_json(doc, IngestMode::strict); }), ErrorKind::ParseError);
  EXPECT_EQ(match_log_from_json(doc, IngestMode::lenient), log);
}

TEST(MatchLogIo, BareNamesResolveAgainstRoster) {
  auto log = base_log();
  auto doc = to_json(log);
  doc["events"] = nlohmann::json::array(
      {{{"half", 1}, {"offset_s", 100}, {"kind", "goal"}, {"team", "home"},
        {"actor", log.home.players[9].name}}});
  auto parsed = match_log_from_json(doc);
  EXPECT_EQ(*parsed.events[0].actor, log.home.players[9]);

  doc["events"][0]["actor"] = "Nobody";
  EXPECT_EQ(kind_of([&] { match_log_from_json(doc); }), ErrorKind::ActorNotInLineup);
}
