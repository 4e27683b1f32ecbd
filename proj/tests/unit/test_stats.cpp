#include <gtest/gtest.h>

#include <random>

#include "../support/stats_gen.hpp"
#include "pitchside/common/error.hpp"

using namespace pitchside;
using namespace pitchside::stats;
using pitchside::testing::day;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

StatStore tiny_store() {
  std::vector<MatchRecord> m = {
      {"m1", "Arsenal", "Chelsea", "Premier League", "2016-2017", day(2016, 9, 1, 15), 2, 1},
      {"m2", "Chelsea", "Arsenal", "Premier League", "2016-2017", day(2016, 10, 1, 15), 0, 0},
      {"m3", "Arsenal", "Paris SG", "UEFA Champions League", "2016-2017", day(2016, 11, 22, 19), 2, 2},
      {"m4", "Arsenal", "Chelsea", "Premier League", "2015-2016", day(2016, 3, 1, 15), 1, 3},
  };
  std::vector<StatEvent> e = {
      {"m1", {1, 600}, EventType::goal, "Arsenal", "Alexis Sanchez", GoalMethod::open_play},
      {"m1", {1, 600}, EventType::assist, "Arsenal", "Mesut Ozil", {}},
      {"m1", {2, 100}, EventType::goal, "Arsenal", "Alexis Sanchez", GoalMethod::penalty},
      {"m1", {2, 90}, EventType::penalty_awarded, "Arsenal", "", {}},
      {"m1", {2, 700}, EventType::goal, "Chelsea", "Alexis Sanchez", GoalMethod::own_goal},
      {"m1", {2, 800}, EventType::yellow_card, "Chelsea", "Gary Cahill", {}},
      {"m2", {1, 50}, EventType::corner, "Chelsea", "", {}},
      {"m2", {1, 500}, EventType::red_card, "Chelsea", "Gary Cahill", {}},
      {"m3", {1, 100}, EventType::goal, "Arsenal", "Alexis Sanchez", GoalMethod::header},
      {"m3", {1, 200}, EventType::goal, "Arsenal", "Alexis Sanchez", GoalMethod::open_play},
      {"m4", {1, 200}, EventType::goal, "Arsenal", "Alexis Sanchez", GoalMethod::open_play},
  };
  std::vector<PlayerBio> p = {{"Alexis Sanchez", "Chile", 169, "1988-12-19"},
                              {"Mesut Ozil", "Germany", 180, "1988-10-15"},
                              {"Gary Cahill", "England", 193, "1985-12-19"},
                              {"Danilo", "Brazil", 184, "1991-07-15"},
                              {"danilo", "Brazil", 184, "1996-05-28"}};
  return StatStore(m, e, p);
}

long count_of(const StatStore& s, const std::string& dsl) {
  return std::get<long>(execute(s, parse_query(dsl)).value);
}

}  // namespace

TEST(StatQueryParse, CountGoalsWithSeason) {
  auto q = parse_query(
      R"(COUNT goals PLAYER "Alexis Sanchez" SEASON 2016-2017 BEFORE 2016-11-22)");
  EXPECT_EQ(q.verb, Verb::count);
  EXPECT_EQ(q.stat, Stat::goals);
  EXPECT_EQ(q.subject_kind, Subject::player);
  EXPECT_EQ(q.subject, "Alexis Sanchez");
  EXPECT_EQ(q.season, std::optional<std::string>("2016-2017"));
  EXPECT_EQ(q.as_of, day(2016, 11, 22));
  EXPECT_FALSE(q.method);
  EXPECT_FALSE(q.league);
}

TEST(StatQueryParse, KeywordsAreCaseInsensitiveAndClausesUnordered) {
  auto a = parse_query(
      R"(count Goals team "X" before 2016-01-01 league "Premier League" method penalty)");
  auto b = parse_query(
      R"(COUNT goals TEAM "X" METHOD PENALTY LEAGUE "Premier League" BEFORE 2016-01-01)");
  EXPECT_EQ(a, b);
}

TEST(StatQueryParse, OtherVerbs) {
  auto l = parse_query(R"(LIST MATCHES TEAM "FC Porto" LEAGUE "UEFA Champions League" BEFORE 2015-04-14)");
  EXPECT_EQ(l.verb, Verb::list_matches);
  auto r = parse_query(R"(RECORD TEAM "Chelsea" VENUE AWAY BEFORE 2016-02-02)");
  EXPECT_EQ(r.verb, Verb::team_record);
  EXPECT_EQ(r.venue, Venue::away);
  auto n = parse_query(R"(LAST 3 RESULTS TEAM "Paris SG" BEFORE 2017-03-07)");
  EXPECT_EQ(n.verb, Verb::last_n_results);
  EXPECT_EQ(n.n, 3);
}

TEST(StatQueryParse, MissingBeforeIsItsOwnError) {
  EXPECT_EQ(kind_of([] { parse_query(R"(COUNT goals TEAM "X")"); }), ErrorKind::MissingBefore);
}

TEST(StatQueryParse, SyntaxErrorsCarryPosition) {
  try {
    parse_query(R"(COUNT goals TEAM X BEFORE 2016-01-01)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(e.index(), std::optional<std::size_t>(17));
  }
  for (const char* bad : {
           R"(TALLY goals TEAM "X" BEFORE 2016-01-01)",
           R"(COUNT goals TEAM "X" BEFORE 2016-13-01)",
           R"(COUNT goals TEAM "X" BEFORE 2016-01-01 BEFORE 2016-01-02)",
           R"(COUNT fouls TEAM "X" METHOD penalty BEFORE 2016-01-01)",
           R"(COUNT goals PLAYER "X" VENUE HOME BEFORE 2016-01-01)",
           R"(COUNT goals TEAM "X" FOR "Y" BEFORE 2016-01-01)",
           R"(LAST 0 RESULTS TEAM "X" BEFORE 2016-01-01)",
           R"(COUNT goals TEAM "unterminated BEFORE 2016-01-01)",
           R"(COUNT goals TEAM "" BEFORE 2016-01-01)",
           R"(COUNT goals TEAM "X" BEFORE 2016-01-01 SEASON)",
       }) {
    EXPECT_EQ(kind_of([&] { parse_query(bad); }), ErrorKind::SyntaxError) << bad;
  }
}

TEST(StatQueryParse, UnknownStatParsesButDoesNotExecute) {
  auto q = parse_query(R"(COUNT possession TEAM "Real Madrid" BEFORE 2016-01-01)");
  EXPECT_EQ(q.stat, Stat::unsupported);
  EXPECT_EQ(q.unsupported_stat, "possession");
  EXPECT_EQ(print_query(q), R"(COUNT possession TEAM "Real Madrid" BEFORE 2016-01-01)");
  EXPECT_EQ(kind_of([&] { execute(tiny_store(), q); }), ErrorKind::UnsupportedStat);
}

TEST(StatQueryPrint, EscapesAndQuotedSeasons) {
  StatQuery q;
  q.verb = Verb::count;
  q.stat = Stat::fouls;
  q.subject_kind = Subject::player;
  q.subject = R"(Odd "Name" \ Here)";
  q.season = "2016 spring";
  q.as_of = day(2017, 1, 2, 18);
  const auto text = print_query(q);
  EXPECT_EQ(text, R"(COUNT fouls PLAYER "Odd \"Name\" \\ Here" SEASON "2016 spring" BEFORE 2017-01-02T18:00:00Z)");
  EXPECT_EQ(parse_query(text), q);
}

TEST(StatQueryPrint, RoundTripOnRandomQueries) {
  std::mt19937_64 rng(99);
  const auto spec = pitchside::testing::default_spec();
  for (int i = 0; i < 500; ++i) {
    auto q = pitchside::testing::random_query(rng, spec, day(2015, 1, 1), day(2018, 1, 1));
    EXPECT_EQ(parse_query(print_query(q)), q) << print_query(q);
  }
}

TEST(StatExecute, EmptyStoreCountsZero) {
  StatStore empty;
  EXPECT_EQ(count_of(empty, R"(COUNT goals TEAM "Nobody" BEFORE 2016-01-01)"), 0);
}

TEST(StatExecute, GoalCountsAndMethods) {
  const auto s = tiny_store();
  // m1 open + penalty, m4 open; the own goal in m1 and everything in m3 are excluded
  EXPECT_EQ(count_of(s, R"(COUNT goals PLAYER "Alexis Sanchez" BEFORE 2016-11-22)"), 3);
  EXPECT_EQ(count_of(s, R"(COUNT goals PLAYER "alexis sanchez" METHOD any BEFORE 2016-11-22)"), 4);
  EXPECT_EQ(count_of(s, R"(COUNT goals PLAYER "Alexis Sanchez" METHOD own_goal BEFORE 2016-11-22)"), 1);
  EXPECT_EQ(count_of(s, R"(COUNT goals PLAYER "Alexis Sanchez" SEASON 2016-2017 BEFORE 2016-11-22)"), 2);
  EXPECT_EQ(count_of(s, R"(COUNT goals PLAYER "Alexis Sanchez" FOR "Arsenal" METHOD any BEFORE 2016-11-22)"), 3);
  // team goals include the opponent's own goal credited to them
  EXPECT_EQ(count_of(s, R"(COUNT goals TEAM "Chelsea" BEFORE 2016-11-22)"), 1);
  EXPECT_EQ(count_of(s, R"(COUNT goals TEAM "Arsenal" BEFORE 2016-11-23)"), 5);
}

TEST(StatExecute, KickoffOnTheBoundaryIsExcluded) {
  const auto s = tiny_store();
  EXPECT_EQ(count_of(s, R"(COUNT goals TEAM "Arsenal" BEFORE 2016-11-22T19:00:00Z)"), 3);
  EXPECT_EQ(count_of(s, R"(COUNT goals TEAM "Arsenal" BEFORE 2016-11-22T19:00:01Z)"), 5);
}

TEST(StatExecute, CardsAndTeamEvents) {
  const auto s = tiny_store();
  EXPECT_EQ(count_of(s, R"(COUNT cards_any PLAYER "Gary Cahill" BEFORE 2017-01-01)"), 2);
  EXPECT_EQ(count_of(s, R"(COUNT yellow_cards PLAYER "Gary Cahill" BEFORE 2017-01-01)"), 1);
  EXPECT_EQ(count_of(s, R"(COUNT corners TEAM "Chelsea" BEFORE 2017-01-01)"), 1);
  EXPECT_EQ(count_of(s, R"(COUNT penalties_awarded TEAM "Arsenal" BEFORE 2017-01-01)"), 1);
  EXPECT_EQ(count_of(s, R"(COUNT assists PLAYER "Mesut Ozil" BEFORE 2017-01-01)"), 1);
}

TEST(StatExecute, ListsRecordsAndLastN) {
  const auto s = tiny_store();
  auto list = execute(s, parse_query(R"(LIST MATCHES TEAM "Arsenal" BEFORE 2017-01-01)"));
  const auto& ms = std::get<std::vector<MatchSummary>>(list.value);
  ASSERT_EQ(ms.size(), 4u);
  EXPECT_EQ(ms[0].match_id, "m4");
  EXPECT_EQ(ms[3].match_id, "m3");

  auto rec = execute(s, parse_query(R"(RECORD TEAM "Arsenal" SEASON 2016-2017 BEFORE 2017-01-01)"));
  EXPECT_EQ(std::get<TeamRecord>(rec.value), (TeamRecord{1, 2, 0, 4, 3}));
  auto away = execute(s, parse_query(R"(RECORD TEAM "Chelsea" VENUE AWAY BEFORE 2017-01-01)"));
  EXPECT_EQ(std::get<TeamRecord>(away.value), (TeamRecord{1, 0, 1, 4, 3}));

  auto last = execute(s, parse_query(R"(LAST 2 RESULTS TEAM "Arsenal" BEFORE 2017-01-01)"));
  const auto& ls = std::get<std::vector<MatchSummary>>(last.value);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0].match_id, "m3");
  EXPECT_EQ(ls[1].match_id, "m2");
  EXPECT_EQ(last.provenance.size(), 2u);
  EXPECT_EQ(last.provenance[0].match_id, "m2");
}

TEST(StatExecute, UnknownEntities) {
  const auto s = tiny_store();
  EXPECT_EQ(kind_of([&] { execute(s, parse_query(R"(COUNT goals TEAM "Nowhere" BEFORE 2017-01-01)")); }),
            ErrorKind::UnknownEntity);
  EXPECT_EQ(kind_of([&] {
              execute(s, parse_query(R"(COUNT goals PLAYER "Nobody Known" BEFORE 2017-01-01)"));
            }),
            ErrorKind::UnknownEntity);
  // nothing visible yet: no basis to call the subject unknown
  EXPECT_EQ(count_of(s, R"(COUNT goals TEAM "Nowhere" BEFORE 2010-01-01)"), 0);
  // listed in the players table without events
  EXPECT_EQ(count_of(s, R"(COUNT goals PLAYER "Danilo" BEFORE 2017-01-01)"), 0);
}

TEST(StatExecute, ProvenanceCarriesContributions) {
  const auto s = tiny_store();
  auto a = execute(s, parse_query(R"(COUNT goals PLAYER "Alexis Sanchez" METHOD any BEFORE 2017-01-01)"));
  ASSERT_EQ(a.provenance.size(), 3u);
  EXPECT_EQ(a.provenance[0], (Provenance{"m4", day(2016, 3, 1, 15), 1}));
  EXPECT_EQ(a.provenance[1], (Provenance{"m1", day(2016, 9, 1, 15), 3}));
  EXPECT_EQ(a.provenance[2].match_id, "m3");
}

TEST(StatExecute, MatchesBruteForceOracle) {
  std::mt19937_64 rng(7);
  const auto spec = pitchside::testing::default_spec();
  for (int trial = 0; trial < 300; ++trial) {
    const auto store = pitchside::testing::random_store(rng, spec, 25, day(2015, 6, 1), day(2017, 6, 1));
    const auto q = pitchside::testing::random_query(rng, spec, day(2015, 6, 1), day(2017, 6, 1));
    EXPECT_EQ(pitchside::testing::outcome(store, q, execute),
              pitchside::testing::outcome(store, q, pitchside::testing::oracle_execute))
        << print_query(q);
  }
}

TEST(StatExecute, MethodAnyIsTheSumOfMethods) {
  std::mt19937_64 rng(8);
  const auto spec = pitchside::testing::default_spec();
  const auto store = pitchside::testing::random_store(rng, spec, 60, day(2015, 6, 1), day(2017, 6, 1));
  for (const auto& team : spec.teams) {
    for (const auto& subject : {team, pitchside::testing::team_players(team)[0]}) {
      const bool player = subject != team;
      const std::string head = std::string("COUNT goals ") + (player ? "PLAYER" : "TEAM") + " \"" + subject + "\"";
      long parts = 0;
      for (const char* m : {"open_play", "penalty", "header", "own_goal"})
        parts += count_of(store, head + " METHOD " + m + " BEFORE 2018-01-01");
      EXPECT_EQ(count_of(store, head + " METHOD any BEFORE 2018-01-01"), parts);
    }
  }
}

TEST(StatExecute, FutureRecordsNeverChangeAnswers) {
  std::mt19937_64 rng(21);
  const auto spec = pitchside::testing::default_spec();
  for (int trial = 0; trial < 500; ++trial) {
    const auto base = pitchside::testing::random_store(rng, spec, 15, day(2015, 6, 1), day(2017, 6, 1));
    const auto q = pitchside::testing::random_query(rng, spec, day(2015, 6, 1), day(2017, 6, 1));
    const auto extra = pitchside::testing::random_store(rng, spec, 5, q.as_of, q.as_of + std::chrono::days(400), "F");
    auto matches = base.matches();
    auto events = base.events();
    matches.insert(matches.end(), extra.matches().begin(), extra.matches().end());
    events.insert(events.end(), extra.events().begin(), extra.events().end());
    const StatStore grown(matches, events, base.players());
    EXPECT_EQ(pitchside::testing::outcome(grown, q, execute),
              pitchside::testing::outcome(base, q, execute))
        << print_query(q);
  }
}

TEST(PlayerBackground, LookupRules) {
  const auto s = tiny_store();
  EXPECT_EQ(player_background(s, "mesut ozil"), (PlayerBio{"Mesut Ozil", "Germany", 180, "1988-10-15"}));
  EXPECT_EQ(kind_of([&] { player_background(s, "Someone Else"); }), ErrorKind::UnknownEntity);
  EXPECT_EQ(kind_of([&] { player_background(s, "Danilo"); }), ErrorKind::DuplicateEntity);
}

TEST(StatStore, RejectsInconsistentTables) {
  std::vector<MatchRecord> m = {{"a", "X", "Y", "L", "S", day(2016, 1, 1), 0, 0}};
  EXPECT_THROW(StatStore({m[0], m[0]}, {}, {}), Error);
  EXPECT_THROW(StatStore(m, {{"zzz", {1, 0}, EventType::foul, "X", "p", {}}}, {}), Error);
  EXPECT_THROW(StatStore(m, {{"a", {1, 0}, EventType::foul, "Q", "p", {}}}, {}), Error);
  EXPECT_THROW(StatStore(m, {{"a", {1, 0}, EventType::foul, "X", "p", GoalMethod::header}}, {}), Error);
}

TEST(StatStore, LoadsShippedFixture) {
  const auto s = StatStore::load(std::string(PITCHSIDE_FIXTURE_DIR) + "/stats");
  EXPECT_GT(s.matches().size(), 200u);
  EXPECT_GT(s.events().size(), 1000u);
  EXPECT_EQ(player_background(s, "Alexis Sanchez").name, "Alexis Sanchez");
  EXPECT_EQ(kind_of([&] { player_background(s, "Danilo"); }), ErrorKind::DuplicateEntity);
}

TEST(ValidateAnswers, DropsRepeatsAndFutureCitations) {
  const auto s = tiny_store();
  auto ask = [&](const std::string& dsl) {
    auto q = parse_query(dsl);
    return AnsweredQuery{q, execute(s, q)};
  };
  const auto a = ask(R"(COUNT goals PLAYER "Alexis Sanchez" BEFORE 2016-11-22)");
  const auto b = ask(R"(COUNT corners TEAM "Chelsea" BEFORE 2016-11-22)");
  const auto leak = ask(R"(COUNT goals TEAM "Arsenal" BEFORE 2016-11-23)");
  auto v = validate_answers({a, a, b, leak}, day(2016, 11, 22, 19));
  ASSERT_EQ(v.kept.size(), 2u);
  EXPECT_EQ(print_query(v.kept[0].query), print_query(a.query));
  EXPECT_EQ(print_query(v.kept[1].query), print_query(b.query));
  ASSERT_EQ(v.discarded.size(), 2u);
  EXPECT_EQ(print_query(v.discarded[1].query), print_query(leak.query));

  auto all = validate_answers({a, b}, day(2016, 11, 22, 19));
  EXPECT_EQ(all.kept.size(), 2u);
  EXPECT_TRUE(all.discarded.empty());
}

TEST(RenderAnswer, Shapes) {
  const auto s = tiny_store();
  auto q = parse_query(R"(RECORD TEAM "Arsenal" SEASON 2016-2017 BEFORE 2017-01-01)");
  EXPECT_EQ(render_answer({q, execute(s, q)}),
            R"(RECORD TEAM "Arsenal" SEASON 2016-2017 BEFORE 2017-01-01 => 1 wins, 2 draws, 0 losses (goals 4-3))");
  auto c = parse_query(R"(COUNT goals TEAM "Chelsea" BEFORE 2016-11-22)");
  EXPECT_EQ(render_answer({c, execute(s, c)}), R"(COUNT goals TEAM "Chelsea" BEFORE 2016-11-22 => 1)");
}
