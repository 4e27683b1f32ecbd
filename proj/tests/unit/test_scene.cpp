#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "../support/scene_gen.hpp"
#include "pitchside/common/client.hpp"
#include "pitchside/common/error.hpp"
#include "pitchside/scene/colors.hpp"
#include "pitchside/scene/report.hpp"

using namespace pitchside;
using namespace pitchside::scene;
using pitchside::testing::make_player;

namespace {

std::vector<FrameFeature> constant_features(std::size_t n) {
  std::vector<FrameFeature> f;
  for (std::size_t i = 0; i < n; ++i) f.push_back({i, {10.0, 20.0, 30.0}});
  return f;
}

std::vector<event::PlayerRef> home_players() {
  std::vector<event::PlayerRef> out;
  for (int n = 1; n <= 11; ++n) out.push_back(make_player("Home FC", n));
  return out;
}

}  // namespace

TEST(DetectShots, ConstantInputIsOneShot) {
  auto shots = detect_shots(constant_features(40));
  ASSERT_EQ(shots.size(), 1u);
  EXPECT_EQ(shots[0], (ShotSpan{0, 40}));
}

TEST(DetectShots, SingleFrame) {
  auto shots = detect_shots(constant_features(1));
  EXPECT_EQ(shots, (std::vector<ShotSpan>{{0, 1}}));
}

TEST(DetectShots, OneJumpSplitsAtTheJump) {
  std::vector<FrameFeature> f;
  for (std::size_t i = 0; i < 60; ++i) f.push_back({i, {i < 30 ? 50.0 : 90.0}});
  auto shots = detect_shots(f, 16);
  EXPECT_EQ(shots, (std::vector<ShotSpan>{{0, 30}, {30, 60}}));
}

TEST(DetectShots, ThresholdIsStrict) {
  std::vector<FrameFeature> f = {{0, {0.0}}, {1, {16.0}}, {2, {32.1}}};
  auto shots = detect_shots(f, 16);
  EXPECT_EQ(shots, (std::vector<ShotSpan>{{0, 2}, {2, 3}}));
}

TEST(DetectShots, MetricIsMeanOverChannels) {
  // channel diffs 30, 0, 0 -> mean 10, below 16
  std::vector<FrameFeature> f = {{0, {0.0, 5.0, 5.0}}, {1, {30.0, 5.0, 5.0}}};
  EXPECT_EQ(detect_shots(f).size(), 1u);
  EXPECT_DOUBLE_EQ(content_differences(f)[0], 10.0);
}

TEST(DetectShots, DefaultsAreSixteenAndTwentyFive) {
  EXPECT_EQ(kDefaultShotThreshold, 16.0);
  EXPECT_EQ(kShotDetectionFps, 25.0);
}

TEST(DetectShots, MatchesLinearScanAndPartitions) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = pitchside::testing::random_differences(rng, 16);
    const auto shots = detect_shots(pitchside::testing::features_for(d), 16);
    const auto starts = pitchside::testing::oracle_shot_starts(d, 16);
    ASSERT_EQ(shots.size(), starts.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < shots.size(); ++i) {
      EXPECT_EQ(shots[i].start, starts[i]);
      EXPECT_LT(shots[i].start, shots[i].end);
      if (i + 1 < shots.size()) EXPECT_EQ(shots[i].end, shots[i + 1].start);
      total += shots[i].length();
    }
    EXPECT_EQ(total, d.size() + 1);
    EXPECT_EQ(shots.back().end, d.size() + 1);
  }
}

TEST(DetectShots, RejectsBadInput) {
  std::vector<FrameFeature> none;
  EXPECT_THROW(
      {
        try {
          detect_shots(none);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::EmptySequence);
          throw;
        }
      },
      Error);
  EXPECT_THROW(detect_shots(constant_features(3), 0.0), Error);
  std::vector<FrameFeature> gap = {{0, {1.0}}, {2, {1.0}}};
  EXPECT_THROW(detect_shots(gap), Error);
  std::vector<FrameFeature> ragged = {{0, {1.0}}, {1, {1.0, 2.0}}};
  EXPECT_THROW(detect_shots(ragged), Error);
}

TEST(Keyframes, FirstMiddleLast) {
  EXPECT_EQ(keyframes({0, 1}), (std::array<std::size_t, 3>{0, 0, 0}));
  EXPECT_EQ(keyframes({10, 20}), (std::array<std::size_t, 3>{10, 14, 19}));
  EXPECT_EQ(keyframes({5, 8}), (std::array<std::size_t, 3>{5, 6, 7}));
}

TEST(FeatureCsv, Parses) {
  auto f = parse_feature_csv("frame_index,c1,c2\n0,1.5,2\n1,3,4\n");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[1].frame_index, 1u);
  EXPECT_EQ(f[1].channels, (std::vector<double>{3, 4}));
  EXPECT_THROW(parse_feature_csv("c1,c2\n1,2\n"), Error);
  EXPECT_THROW(parse_feature_csv("frame_index,c1\n0,x\n"), Error);
}

TEST(MatchFaces, MaxOverSlotsAboveTau) {
  const auto lineup = home_players();
  std::vector<FaceObservation> obs = {{0, 1, lineup[4], 0.4}, {0, 2, lineup[4], 0.7},
                                      {0, 3, lineup[4], 0.5}};
  auto r = match_faces(obs, lineup, 0.6);
  ASSERT_EQ(r.count(0), 1u);
  EXPECT_EQ(r[0], (std::vector<event::PlayerRef>{lineup[4]}));
}

TEST(MatchFaces, ExactlyTauIsNotAMatch) {
  const auto lineup = home_players();
  std::vector<FaceObservation> obs = {{0, 1, lineup[0], 0.6}, {0, 2, lineup[0], 0.6},
                                      {0, 3, lineup[0], 0.6}};
  EXPECT_TRUE(match_faces(obs, lineup).empty());
}

TEST(MatchFaces, EmptyObservations) {
  EXPECT_TRUE(match_faces({}, home_players()).empty());
}

TEST(MatchFaces, DistanceConvention) {
  const auto lineup = home_players();
  std::vector<FaceObservation> obs = {{1, 1, lineup[2], 0.7}, {1, 2, lineup[2], 0.55},
                                      {2, 1, lineup[3], 0.6}};
  auto r = match_faces(obs, lineup, 0.6, FaceScore::distance);
  EXPECT_EQ(pitchside::testing::face_pairs(r),
            (std::set<std::pair<std::size_t, std::string>>{{1, lineup[2].name}}));
}

TEST(MatchFaces, ListsFollowLineupOrder) {
  const auto lineup = home_players();
  std::vector<FaceObservation> obs = {{0, 1, lineup[9], 0.9}, {0, 1, lineup[1], 0.9}};
  auto r = match_faces(obs, lineup);
  EXPECT_EQ(r[0], (std::vector<event::PlayerRef>{lineup[1], lineup[9]}));
}

TEST(MatchFaces, RejectsOutsiders) {
  const auto lineup = home_players();
  std::vector<FaceObservation> obs = {{0, 1, make_player("Away FC", 3), 0.9}};
  try {
    match_faces(obs, lineup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CandidateNotInLineup);
  }
  std::vector<FaceObservation> bad_slot = {{0, 4, lineup[0], 0.9}};
  EXPECT_THROW(match_faces(bad_slot, lineup), Error);
  std::vector<FaceObservation> bad_score = {{0, 1, lineup[0], 1.5}};
  EXPECT_THROW(match_faces(bad_score, lineup), Error);
  EXPECT_THROW(match_faces({}, lineup, 1.0), Error);
}

TEST(MatchFaces, MonotoneInObservationsAntitoneInTau) {
  std::mt19937_64 rng(5);
  const auto lineup = home_players();
  std::uniform_real_distribution<double> tau(0.05, 0.95);
  for (int trial = 0; trial < 300; ++trial) {
    auto obs = pitchside::testing::random_observations(rng, lineup, 6, 30);
    const double t = tau(rng);
    const auto base = pitchside::testing::face_pairs(match_faces(obs, lineup, t));

    auto more = obs;
    auto extra = pitchside::testing::random_observations(rng, lineup, 6, 5);
    more.insert(more.end(), extra.begin(), extra.end());
    const auto grown = pitchside::testing::face_pairs(match_faces(more, lineup, t));
    EXPECT_TRUE(std::includes(grown.begin(), grown.end(), base.begin(), base.end()));

    const auto stricter =
        pitchside::testing::face_pairs(match_faces(obs, lineup, std::min(0.99, t + 0.1)));
    EXPECT_TRUE(std::includes(base.begin(), base.end(), stricter.begin(), stricter.end()));
  }
}

TEST(NormalizeColor, MergesEquivalentDescriptions) {
  EXPECT_EQ(normalize_color("red and blue"), "blue/red");
  EXPECT_EQ(normalize_color("blue and red striped"), "blue/red");
  EXPECT_EQ(normalize_color("Light Blue"), "light-blue");
  EXPECT_EQ(normalize_color("sky blue shirt"), "light-blue");
  EXPECT_EQ(normalize_color("navy"), "dark-blue");
  EXPECT_EQ(normalize_color("navy and white"), "dark-blue/white");
  EXPECT_EQ(normalize_color("Grey"), "gray");
  EXPECT_EQ(normalize_color("striped"), "");
}

TEST(NormalizeColor, IdempotentAndOrderInsensitive) {
  const std::vector<std::string> words = {"red",   "blue",  "light", "dark", "and",
                                          "white", "navy",  "grey",  "sky",  "striped",
                                          "black", "green", "crimson", "with"};
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> len(1, 5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> toks;
    for (int i = len(rng); i > 0; --i) toks.push_back(words[pick(rng)]);
    std::string text;
    for (const auto& t : toks) text += t + " ";
    const auto once = normalize_color(text);
    EXPECT_EQ(normalize_color(once), once) << text;
  }
  // reordering whole colour phrases does not change the label
  EXPECT_EQ(normalize_color("white and light blue"), normalize_color("light blue and white"));
  EXPECT_EQ(normalize_color("black, white, red"), normalize_color("red white black"));
}

TEST(ResolveColors, DirectAssignment) {
  auto log = pitchside::testing::base_log();
  std::vector<ColorClaim> claims = {{"Red shirt", {}}, {"blue", {}}, {"red", {}}};
  auto r = resolve_team_colors(claims, log.home, log.away, TeamColors{"red", "blue"});
  ASSERT_TRUE(std::holds_alternative<TeamColors>(r));
  EXPECT_EQ(std::get<TeamColors>(r), (TeamColors{"red", "blue"}));
}

TEST(ResolveColors, UniqueJerseyNumberBreaksTie) {
  auto log = pitchside::testing::base_log();
  log.away.players[9].number = 30;  // number 10 now exists only for the home side
  std::vector<ColorClaim> claims = {{"light blue", 10}, {"dark blue", {}}};
  auto r = resolve_team_colors(claims, log.home, log.away, TeamColors{"blue", "blue"});
  ASSERT_TRUE(std::holds_alternative<TeamColors>(r));
  EXPECT_EQ(std::get<TeamColors>(r), (TeamColors{"light-blue", "dark-blue"}));
}

TEST(ResolveColors, SharedNumberStaysAmbiguous) {
  auto log = pitchside::testing::base_log();
  std::vector<ColorClaim> claims = {{"light blue", 10}, {"dark blue", 7}};
  auto r = resolve_team_colors(claims, log.home, log.away, TeamColors{"blue", "blue"});
  ASSERT_TRUE(std::holds_alternative<AmbiguityReport>(r));
  const auto& amb = std::get<AmbiguityReport>(r);
  EXPECT_EQ(amb.candidates, (std::vector<std::string>{"dark-blue", "light-blue"}));
  EXPECT_EQ(amb.unresolved_claims, (std::vector<std::size_t>{0, 1}));
}

TEST(ResolveColors, MergedDescriptionsVoteTogether) {
  auto log = pitchside::testing::base_log();
  std::vector<ColorClaim> claims = {{"red and blue", {}}, {"blue and red striped", {}},
                                    {"white", {}}};
  auto r = resolve_team_colors(claims, log.home, log.away, TeamColors{"blue/red", "white"});
  ASSERT_TRUE(std::holds_alternative<TeamColors>(r));
  EXPECT_EQ(std::get<TeamColors>(r), (TeamColors{"blue/red", "white"}));
}

TEST(ResolveColors, NoKnowledgeNoNumbersIsAmbiguous) {
  auto log = pitchside::testing::base_log();
  std::vector<ColorClaim> claims = {{"green", {}}, {"yellow", {}}};
  EXPECT_TRUE(std::holds_alternative<AmbiguityReport>(
      resolve_team_colors(claims, log.home, log.away)));
}

TEST(JerseyRecord, NeedsNameOrNumber) {
  EXPECT_THROW(JerseyRecord(std::nullopt, std::nullopt, "red", "runs"), Error);
  EXPECT_THROW(JerseyRecord(std::string("  "), std::nullopt, "red", "runs"), Error);
  EXPECT_NO_THROW(JerseyRecord(std::nullopt, 9, "red", "runs"));
  EXPECT_NO_THROW(JerseyRecord(std::string("Sanchez"), std::nullopt, "red", "runs"));
}

TEST(JerseyRecord, LineFormatRoundTrip) {
  const std::string text =
      "Scoreboard shows 1-0 at 23:10\n"
      "(Alexis Sanchez, 7, Red and White): celebrates with teammates\n"
      "(?, 10, navy): takes the corner\n";
  auto recs = parse_jersey_lines(text);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].name(), std::optional<std::string>("Alexis Sanchez"));
  EXPECT_EQ(recs[0].number(), std::optional<int>(7));
  EXPECT_EQ(recs[0].color(), "red/white");
  EXPECT_EQ(recs[0].action(), "celebrates with teammates");
  EXPECT_FALSE(recs[1].name());
  EXPECT_EQ(recs[1].color(), "dark-blue");
  EXPECT_EQ(format_jersey(recs[0]), "(Alexis Sanchez, 7, red/white): celebrates with teammates");
  auto again = parse_jersey_lines(format_jersey(recs[0]) + "\n" + format_jersey(recs[1]));
  EXPECT_EQ(again, recs);

  EXPECT_THROW(parse_jersey_lines("(?, ?, red): waves"), Error);
  EXPECT_THROW(parse_jersey_lines("(Sanchez, seven, red): waves"), Error);
  EXPECT_THROW(parse_jersey_lines("(Sanchez, 7, red) waves"), Error);
}

TEST(SceneReport, LongViewsCarryNothing) {
  std::vector<ShotSpan> shots = {{0, 10}, {10, 30}};
  std::vector<View> views = {View::long_view, View::out_of_field};
  const auto lineup = home_players();
  RecognizedFaces faces = {{0, {lineup[0]}}, {1, {lineup[1]}}};
  JerseysByShot jerseys = {{1, {JerseyRecord(std::nullopt, 3, "red", "runs")}}};
  auto r = build_scene_report(shots, views, faces, jerseys);
  EXPECT_EQ(r.shots.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_TRUE(r.recognized[i].empty());
    EXPECT_TRUE(r.jerseys[i].empty());
  }
  EXPECT_EQ(r.close_shot_count(), 0u);
}

TEST(SceneReport, FaceAttachesOnlyToItsCloseShot) {
  std::vector<ShotSpan> shots = {{0, 10}, {10, 20}, {20, 25}};
  std::vector<View> views = {View::long_view, View::close_up, View::medium};
  const auto lineup = home_players();
  RecognizedFaces faces = {{1, {lineup[6]}}};
  auto r = build_scene_report(shots, views, faces, {});
  EXPECT_TRUE(r.recognized[0].empty());
  EXPECT_EQ(r.recognized[1], (std::vector<event::PlayerRef>{lineup[6]}));
  EXPECT_TRUE(r.recognized[2].empty());
  EXPECT_EQ(r.close_shot_count(), 2u);
}

TEST(SceneReport, GatingMatchesCloseLabelsOnRandomInputs) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> view(0, 3);
  const auto lineup = home_players();
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ShotSpan> shots;
    std::vector<View> views;
    RecognizedFaces faces;
    for (std::size_t i = 0; i < 8; ++i) {
      shots.push_back({i * 10, i * 10 + 10});
      views.push_back(static_cast<View>(view(rng)));
      faces[i] = {lineup[i]};
    }
    auto r = build_scene_report(shots, views, faces, {});
    std::size_t with_faces = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      with_faces += !r.recognized[i].empty();
      EXPECT_EQ(!r.recognized[i].empty(), is_close(views[i]));
    }
    EXPECT_EQ(with_faces, r.close_shot_count());
  }
}

TEST(SceneReport, Errors) {
  std::vector<ShotSpan> shots = {{0, 10}};
  std::vector<View> views = {View::medium, View::long_view};
  try {
    build_scene_report(shots, views, {}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
  std::vector<View> one = {View::medium};
  RecognizedFaces stray = {{3, {home_players()[0]}}};
  EXPECT_THROW(build_scene_report(shots, one, stray, {}), Error);
}

TEST(SceneReport, JsonRoundTripAndRendering) {
  std::vector<ShotSpan> shots = {{0, 25}, {25, 100}};
  std::vector<View> views = {View::long_view, View::close_up};
  const auto lineup = home_players();
  RecognizedFaces faces = {{1, {lineup[6]}}};
  JerseysByShot jerseys = {{1, {JerseyRecord(lineup[6].name, 7, "red", "celebrates")}}};
  auto r = build_scene_report(shots, views, faces, jerseys, TeamColors{"red", "blue"});
  EXPECT_EQ(scene_report_from_json(to_json(r)), r);
  EXPECT_EQ(render_scene(r),
            "Shot 1 (0.0s-1.0s): long view\n"
            "Shot 2 (1.0s-4.0s): close-up view; faces: Home FC Player 7 #7; jerseys: "
            "(Home FC Player 7, 7, red): celebrates\n");
}

TEST(ViewLabels, ParseVariants) {
  EXPECT_EQ(parse_view("Long view"), View::long_view);
  EXPECT_EQ(parse_view("close-up view."), View::close_up);
  EXPECT_EQ(parse_view("close_up"), View::close_up);
  EXPECT_EQ(parse_view("MEDIUM VIEW"), View::medium);
  EXPECT_EQ(parse_view("out-of-field view"), View::out_of_field);
  EXPECT_THROW(parse_view("panorama"), Error);
  for (auto v : {View::long_view, View::medium, View::close_up, View::out_of_field})
    EXPECT_EQ(parse_view(to_string(v)), v);
}

TEST(ViewLabels, RecordedClassifier) {
  RecordedStore store;
  std::vector<std::string> refs = {"seg1/shot0.jpg", "seg1/shot1.jpg"};
  // record answers under the digests the classifier will compute
  const std::vector<std::string> answers = {"long view", "Close-up view"};
  for (std::size_t i = 0; i < refs.size(); ++i) {
    nlohmann::json req = {{"task", "view_classification"},
                          {"prompt", std::string(view_classification_prompt())},
                          {"image", refs[i]}};
    store.put(request_digest(req), answers[i]);
  }
  RecordedClient client(store);
  EXPECT_EQ(classify_views(client, refs), (std::vector<View>{View::long_view, View::close_up}));
  std::vector<std::string> missing = {"seg1/shot9.jpg"};
  try {
    classify_views(client, missing);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ClientError);
  }
}
