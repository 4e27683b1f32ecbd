// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails. Oracles and generators come from tests/support.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "../support/attention_gen.hpp"
#include "../support/match_gen.hpp"
#include "../support/scene_gen.hpp"
#include "../support/stats_gen.hpp"
#include "json.hpp"
#include "pitchside/common/client.hpp"
#include "pitchside/common/error.hpp"
#include "pitchside/common/files.hpp"
#include "pitchside/eval/claims.hpp"
#include "pitchside/eval/metrics.hpp"
#include "pitchside/eval/structure.hpp"
#include "pitchside/event/curation.hpp"
#include "pitchside/event/io.hpp"
#include "pitchside/grounding/attention.hpp"
#include "pitchside/pipeline/segment.hpp"
#include "pitchside/scene/faces.hpp"
#include "pitchside/scene/shots.hpp"
#include "pitchside/stats/execute.hpp"
#include "pitchside/stats/query.hpp"
#include "pitchside/stats/store.hpp"

namespace fs = std::filesystem;
using namespace pitchside;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

const fs::path kFixtures = PITCHSIDE_FIXTURE_DIR;

/// Thrown by a check to fail its criterion with a reason.
struct Failed {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------- 1

std::string grounding_equivalence() {
  std::mt19937_64 rng(1001);
  const auto t0 = Clock::now();
  for (int i = 0; i < 100; ++i) {
    const bool stochastic = i % 2 == 0;
    const auto raw = testing::random_bundle(rng, stochastic);
    const auto rel = grounding::aggregate(raw.make());
    const auto oracle = testing::oracle_frame_weights(raw);
    require(rel.weights.size() == oracle.size(), "bundle " + str(i) + ": length");
    for (std::size_t n = 0; n < oracle.size(); ++n)
      require(std::abs(rel.weights[n] - oracle[n]) <= 1e-9,
              "bundle " + str(i) + " frame " + str(n) + " differs by " +
                  str(std::abs(rel.weights[n] - oracle[n])));
    if (stochastic) {
      const double sum = std::accumulate(rel.weights.begin(), rel.weights.end(), 0.0);
      require(std::abs(sum - 1.0) <= 1e-9, "bundle " + str(i) + " sums to " + str(sum));
    }
  }
  const double s = seconds_since(t0);
  require(s < 1.0, "took " + str(s) + " s");
  return "100 bundles in " + str(s) + " s";
}

// ---------------------------------------------------------------- 2

std::string state_machine() {
  using namespace pitchside::event;
  std::mt19937_64 rng(1002);
  const auto t0 = Clock::now();
  std::size_t events = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto log = testing::random_log(rng);
    const std::string tag = "log " + str(trial);
    for (std::size_t k : {std::size_t{1}, std::size_t{5}}) {
      auto state = GameState::initial(log, k);
      int prev_home = 0, prev_away = 0;
      for (std::size_t i = 0; i < log.events.size(); ++i) {
        state = apply_event(state, log.events[i]);
        require(state.lineup_home.players.size() == kLineupSize &&
                    state.lineup_away.players.size() == kLineupSize,
                tag + ": lineup size after event " + str(i));
        require(state.score_home >= prev_home && state.score_away >= prev_away,
                tag + ": score decreased at event " + str(i));
        prev_home = state.score_home;
        prev_away = state.score_away;
        // own goals counted for the opponent, by direct recount of the prefix
        int h = 0, a = 0;
        for (std::size_t j = 0; j <= i; ++j) {
          const auto& e = log.events[j];
          if (e.kind == EventKind::own_goal) (e.team == Side::home ? a : h) += 1;
          else if (is_goal_kind(e.kind)) (e.team == Side::home ? h : a) += 1;
        }
        require(state.score_home == h && state.score_away == a,
                tag + ": score after event " + str(i));
      }
      require(state == replay_prefix(log, log.events.size(), k), tag + ": fold vs replay_prefix");
      events += log.events.size();

      std::vector<MatchClock> probes = {MatchClock{1, 0}, MatchClock{2, 3600}};
      for (const auto& e : log.events) probes.push_back(e.clock);
      for (const auto& at : probes) {
        const auto s1 = replay(log, at, {k, false});
        const auto s2 = replay(log, at, {k, false});
        require(s1 == s2, tag + ": replay not deterministic");
        require(s1.key_events == testing::oracle_key_events(log, at), tag + ": key events");
        require(s1.history_events == testing::oracle_history(log, at, k),
                tag + ": history k=" + str(k));
        const auto [h, a] = testing::oracle_score(log, at);
        require(s1.score_home == h && s1.score_away == a, tag + ": replay score");
      }
    }
  }
  const double s = seconds_since(t0);
  require(s < 10.0, "took " + str(s) + " s");
  return "1000 logs, " + str(events) + " folded events in " + str(s) + " s";
}

// ---------------------------------------------------------------- 3

event::SecondaryTimeline timeline_of(const event::MatchLog& log) {
  event::SecondaryTimeline t{log.meta.home, log.meta.away, log.meta.kickoff, {}};
  for (const auto& e : log.events)
    if (event::is_goal_kind(e.kind))
      t.goals.push_back({e.clock, event::credited_side(e.kind, e.team), e.actor->name, e.kind});
  return t;
}

std::string reconciliation() {
  using namespace pitchside::event;
  std::mt19937_64 rng(1003);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t g = static_cast<std::size_t>(trial % 6);
    MatchLog full;
    std::vector<std::size_t> goals;
    do {
      full = testing::random_log(rng, 80);
      goals.clear();
      for (std::size_t i = 0; i < full.events.size(); ++i)
        if (is_goal_kind(full.events[i].kind)) goals.push_back(i);
    } while (goals.size() < g);
    std::shuffle(goals.begin(), goals.end(), rng);
    goals.resize(g);
    std::sort(goals.rbegin(), goals.rend());
    auto primary = full;
    for (std::size_t i : goals) primary.events.erase(primary.events.begin() + static_cast<std::ptrdiff_t>(i));

    const auto result = reconcile_goal_timelines(primary, timeline_of(full));
    const std::string tag = "trial " + str(trial) + " (g=" + str(g) + ")";
    require(result.report.added == g, tag + ": added " + str(result.report.added));
    // the secondary source lists no assists, so restored goals carry none
    auto expected = full.events;
    for (std::size_t i : goals) expected[i].assist.reset();
    // events sharing a clock have no recoverable order; compare them as a group
    const auto canon = [](std::vector<MatchEvent> v) {
      const auto key = [](const MatchEvent& e) {
        return std::make_tuple(e.clock, static_cast<int>(e.kind), static_cast<int>(e.team),
                               e.actor ? e.actor->name : std::string(), e.detail.value_or(""));
      };
      std::stable_sort(v.begin(), v.end(),
                       [&](const MatchEvent& a, const MatchEvent& b) { return key(a) < key(b); });
      return v;
    };
    expected = canon(expected);
    const auto merged = canon(result.log.events);
    if (merged != expected) {
      std::size_t i = 0;
      while (i < expected.size() && i < merged.size() && expected[i] == merged[i]) ++i;
      auto show = [](const std::vector<MatchEvent>& v, std::size_t i) {
        if (i >= v.size()) return std::string("end of log");
        const auto& e = v[i];
        return str(e.clock.half) + ":" + str(e.clock.offset_s) + " " + std::string(to_string(e.kind)) +
               (e.team == Side::home ? " home " : " away ") + (e.actor ? e.actor->name : "-");
      };
      throw Failed{tag + ": first difference at event " + str(i) + ", expected " + show(expected, i) +
                   ", got " + show(merged, i)};
    }
    validate_log(result.log);
  }
  return "100 trials, g cycling 0..5";
}

// ---------------------------------------------------------------- 4

std::string temporal_integrity() {
  using namespace pitchside::stats;
  std::mt19937_64 rng(1004);
  const auto spec = testing::default_spec();
  const auto lo = testing::day(2015, 6, 1), hi = testing::day(2017, 6, 1);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto base = testing::random_store(rng, spec, 12, lo, hi);
    const auto q = testing::random_query(rng, spec, lo, hi);
    const auto extra = testing::random_store(rng, spec, 4, q.as_of, q.as_of + std::chrono::days(400), "F");
    auto matches = base.matches();
    auto events = base.events();
    matches.insert(matches.end(), extra.matches().begin(), extra.matches().end());
    events.insert(events.end(), extra.events().begin(), extra.events().end());
    const StatStore grown(matches, events, base.players());
    require(testing::outcome(grown, q, execute) == testing::outcome(base, q, execute),
            "trial " + str(trial) + ": " + print_query(q));
  }
  return "10000 trials";
}

// ---------------------------------------------------------------- 5

std::string dsl() {
  using namespace pitchside::stats;
  std::mt19937_64 rng(1005);
  const auto spec = testing::default_spec();
  for (int i = 0; i < 1000; ++i) {
    const auto q = testing::random_query(rng, spec, testing::day(2014, 1, 1), testing::day(2018, 1, 1));
    const auto printed = print_query(q);
    require(parse_query(printed) == q, "round trip: " + printed);
    require(print_query(parse_query(printed)) == printed, "reprint: " + printed);
  }
  const auto store = StatStore::load(kFixtures / "stats");
  const auto questions = read_json_file(kFixtures / "stats" / "reference_questions.json");
  require(questions.size() == 30, "expected 30 renderings, found " + str(questions.size()));
  for (const auto& item : questions) {
    const auto text = item.at("dsl").get<std::string>();
    const auto q = parse_query(text);
    const auto got = testing::outcome(store, q, execute);
    if (const auto* kind = std::get_if<ErrorKind>(&got))
      throw Failed{"Q" + str(item.at("id").get<int>()) + " raised " + std::string(error_kind_name(*kind))};
    require(got == testing::outcome(store, q, testing::oracle_execute),
            "Q" + str(item.at("id").get<int>()) + " disagrees with the oracle");
  }
  return "1000 round trips, 30 reference questions";
}

// ---------------------------------------------------------------- 6

std::string verification_fixtures() {
  using namespace pitchside::eval;
  const auto store = stats::StatStore::load(kFixtures / "stats");
  std::size_t good = 0, bad = 0;
  for (const auto& dir : fs::directory_iterator(kFixtures / "eval" / "reference_cases")) {
    const auto name = dir.path().filename().string();
    const bool is_bad = name.starts_with("bad");
    const auto log = event::load_match_log(dir.path() / "log.json");
    std::size_t contradicted = 0, non_supported = 0;
    std::ifstream in(dir.path() / "commentary.jsonl");
    for (std::string line; std::getline(in, line);) {
      const auto j = json::parse(line);
      const MatchClock clock{j.at("half").get<int>(), j.at("offset_s").get<int>()};
      const auto side = j.at("team") == "home" ? event::Side::home : event::Side::away;
      std::optional<std::string> actor;
      if (!j.at("actor").is_null()) actor = j.at("actor").get<std::string>();
      auto claims = extract_claims(j.at("body").get<std::string>(), {&log, clock, side, actor});
      for (const auto& a : j.value("annotations", json::array()))
        claims.push_back(external_stat_claim(a.at("dsl"), a.at("claimed"), a.at("span")));
      const auto verdicts = verify_claims(claims, log, clock, &store);
      for (const auto& e : j.at("expected")) {
        const auto span = e.at("span").get<std::string>();
        const auto it = std::find_if(claims.begin(), claims.end(),
                                     [&](const Claim& c) { return c.span_text == span; });
        require(it != claims.end(), name + ": no claim for '" + span + "'");
        const auto& v = verdicts[static_cast<std::size_t>(it - claims.begin())];
        require(std::string(to_string(v.status)) == e.at("status").get<std::string>(),
                name + ": '" + span + "' is " + std::string(to_string(v.status)));
      }
      for (const auto& v : verdicts) {
        contradicted += v.status == VerdictStatus::contradicted;
        non_supported += v.status != VerdictStatus::supported;
      }
    }
    if (is_bad) {
      require(non_supported > 0, name + ": every verdict supported");
      ++bad;
    } else {
      require(contradicted == 0, name + ": " + str(contradicted) + " contradicted");
      ++good;
    }
  }
  require(bad == 4 && good == 7, "found " + str(bad) + " bad and " + str(good) + " good cases");
  return "4 bad cases flagged, 7 good cases clean";
}

// ---------------------------------------------------------------- 7

std::string metrics() {
  using namespace pitchside::eval;
  std::mt19937_64 rng(1007);
  const std::vector<std::string> players = {"A", "B", "C", "D", "E", "F", "G", "H"};
  const auto team_of = [](const std::string& p) { return p < "E" ? std::string("T") : std::string("U"); };
  std::uniform_int_distribution<int> n_pick(1, 40), p_pick(0, 7), coin(0, 2);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<PredictionRecord> recs;
    const int n = n_pick(rng);
    for (int i = 0; i < n; ++i) {
      const auto gold = players[static_cast<std::size_t>(p_pick(rng))];
      const auto pred = players[static_cast<std::size_t>(p_pick(rng))];
      std::vector<std::string> top3;
      if (coin(rng) != 0) {
        top3 = {pred};
        while (top3.size() < 3) {
          const auto x = players[static_cast<std::size_t>(p_pick(rng))];
          if (std::find(top3.begin(), top3.end(), x) == top3.end()) top3.push_back(x);
        }
      }
      recs.push_back({"s" + str(i), gold, team_of(gold), pred, team_of(pred), top3,
                      coin(rng) == 0 ? Variant::given_team : Variant::open});
    }
    const auto rep = alignment_accuracy(recs);
    for (const auto* m : {&rep.overall, rep.open ? &*rep.open : nullptr,
                          rep.given_team ? &*rep.given_team : nullptr}) {
      if (!m) continue;
      require(m->team >= m->player_at_1, "trial " + str(trial) + ": team below player@1");
      require(m->player_at_1 <= m->player_at_3, "trial " + str(trial) + ": player@1 above player@3");
    }
  }
  const std::vector<PredictionRecord> hand = {
      {"s1", "Ozil", "Arsenal", "Ozil", "Arsenal", {}, Variant::open},
      {"s2", "Sanchez", "Arsenal", "Giroud", "Arsenal", {"Giroud", "Sanchez", "Ozil"}, Variant::open},
      {"s3", "Cavani", "Paris SG", "Cavani", "Paris SG", {}, Variant::open}};
  const auto rep = alignment_accuracy(hand);
  require(std::abs(rep.overall.player_at_1 - 66.67) <= 0.1, "player@1 " + str(rep.overall.player_at_1));
  require(std::abs(rep.overall.player_at_3 - 100.0) <= 0.1, "player@3 " + str(rep.overall.player_at_3));
  require(std::abs(rep.overall.team - 100.0) <= 0.1, "team " + str(rep.overall.team));
  return "500 sets, hand example 66.67/100/100";
}

// ---------------------------------------------------------------- 8

std::string segmentation() {
  using namespace pitchside::scene;
  std::mt19937_64 rng(1008);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = testing::random_differences(rng, 16);
    const auto shots = detect_shots(testing::features_for(d), 16);
    const auto starts = testing::oracle_shot_starts(d, 16);
    require(shots.size() == starts.size(), "sequence " + str(trial) + ": shot count");
    for (std::size_t i = 0; i < shots.size(); ++i)
      require(shots[i].start == starts[i], "sequence " + str(trial) + ": boundary " + str(i));
  }
  for (std::size_t n : {1u, 2u, 50u, 500u}) {
    std::vector<FrameFeature> flat;
    for (std::size_t i = 0; i < n; ++i) flat.push_back({i, {40.0, 40.0, 40.0}});
    require(detect_shots(flat, 16).size() == 1, "constant input of " + str(n) + " frames");
  }
  std::vector<event::PlayerRef> lineup;
  for (int k = 1; k <= 11; ++k) lineup.push_back(testing::make_player("Home FC", k));
  std::uniform_real_distribution<double> tau(0.05, 0.9);
  for (int trial = 0; trial < 500; ++trial) {
    const auto obs = testing::random_observations(rng, lineup, 6, 30);
    const double t = tau(rng);
    std::set<std::pair<std::size_t, std::string>> prev;
    for (int slots = 1; slots <= 3; ++slots) {
      std::vector<FaceObservation> seen;
      for (const auto& o : obs)
        if (o.keyframe_slot <= slots) seen.push_back(o);
      const auto now = testing::face_pairs(match_faces(seen, lineup, t));
      require(std::includes(now.begin(), now.end(), prev.begin(), prev.end()),
              "observation set " + str(trial) + ": fewer faces with more keyframes");
      prev = now;
    }
    const auto stricter = testing::face_pairs(match_faces(obs, lineup, t + 0.1));
    require(std::includes(prev.begin(), prev.end(), stricter.begin(), stricter.end()),
            "observation set " + str(trial) + ": more faces at higher tau");
  }
  return "1000 sequences, constant input, 500 observation sets";
}

// ---------------------------------------------------------------- 9

std::string pipeline_replay() {
  const auto bundles = pipeline::load_segment_bundles(kFixtures / "pipeline" / "segments.json");
  require(bundles.size() == 10, "expected 10 segments, found " + str(bundles.size()));
  const auto store = stats::StatStore::load(kFixtures / "stats");
  const auto recorded = RecordedStore::load(kFixtures / "pipeline" / "recorded.json");
  const auto outputs = [&] {
    RecordedClient client(recorded);
    std::string out;
    for (const auto& r : pipeline::run_segments(bundles, store, client)) {
      out += r.segment_id + "\n";
      if (r.result)
        out += r.result->stage1.c_ea.body() + "\n" + r.result->c_ke.body() + "\n";
      else
        out += std::string(error_kind_name(*r.error_kind)) + "\n";
    }
    return out;
  };
  const auto first = outputs();
  const auto second = outputs();
  require(first == second, "runs differ");

  RecordedClient client(recorded);
  std::size_t ok = 0;
  bool rejected = false;
  for (const auto& r : pipeline::run_segments(bundles, store, client)) {
    if (r.segment_id == "seg09")
      rejected = r.error_kind == ErrorKind::PredictionNotInLineup;
    else
      ok += r.result.has_value();
  }
  require(rejected, "seg09 was not rejected as out of lineup");
  require(ok == 9, str(ok) + " of 9 other segments completed");
  return "two runs byte-identical, seg09 rejected";
}

// ---------------------------------------------------------------- 10

std::string structure() {
  using namespace pitchside::eval;
  std::size_t seen = 0;
  for (const auto& f : fs::directory_iterator(kFixtures / "eval" / "structure")) {
    const auto j = read_json_file(f.path());
    const auto t = structure_tally(parse_label_list(j.at("labels").get<std::string>()));
    const auto& e = j.at("expected");
    const auto name = f.path().filename().string();
    require(std::abs(t.description + t.explanation + t.comment - 100.0) <= 0.01, name + ": shares");
    require(t.low_description == e.at("low_description").get<bool>(), name + ": flag");
    require(std::abs(t.description - e.at("description").get<double>()) <= 0.01 &&
                std::abs(t.explanation - e.at("explanation").get<double>()) <= 0.01 &&
                std::abs(t.comment - e.at("comment").get<double>()) <= 0.01,
            name + ": percentages");
    ++seen;
  }
  require(seen == 20, "found " + str(seen) + " fixtures");
  return "20 fixtures";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"grounding oracle equivalence", grounding_equivalence},
      {"state machine properties", state_machine},
      {"goal reconciliation", reconciliation},
      {"temporal integrity", temporal_integrity},
      {"query language", dsl},
      {"claim verification fixtures", verification_fixtures},
      {"alignment metrics", metrics},
      {"segmentation and face gating", segmentation},
      {"pipeline replay", pipeline_replay},
      {"structure tally", structure},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, check] = criteria[i];
    std::string status = "PASS", detail;
    try {
      detail = check();
    } catch (const Failed& f) {
      status = "FAIL";
      detail = f.why;
    } catch (const Error& e) {
      status = "FAIL";
      detail = std::string(error_kind_name(e.kind())) + ": " + e.what();
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = e.what();
    }
    failures += status == "FAIL";
    std::cout << "criterion " << (i + 1) << " [" << name << "]: " << status << " (" << detail << ")"
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
