// pitchside: every subsystem behind one binary. Documents go to stdout as
// JSON; --pretty switches the evaluation and pipeline commands to tables.
//
// Exit codes: 0 ok, 2 input error, 3 client error, 4 contradicted claims.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pitchside/common/client.hpp"
#include "pitchside/common/error.hpp"
#include "pitchside/common/files.hpp"
#include "pitchside/common/text.hpp"
#include "pitchside/eval/claims.hpp"
#include "pitchside/eval/metrics.hpp"
#include "pitchside/eval/structure.hpp"
#include "pitchside/event/curation.hpp"
#include "pitchside/event/game_state.hpp"
#include "pitchside/event/io.hpp"
#include "pitchside/grounding/attention.hpp"
#include "pitchside/pipeline/segment.hpp"
#include "pitchside/scene/colors.hpp"
#include "pitchside/scene/faces.hpp"
#include "pitchside/scene/report.hpp"
#include "pitchside/scene/shots.hpp"
#include "pitchside/stats/execute.hpp"
#include "pitchside/stats/query.hpp"
#include "pitchside/stats/store.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace pitchside;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitClient = 3;
constexpr int kExitContradicted = 4;

struct Output {
  bool pretty = false;
  std::string out;  // empty: stdout
};

void write_out(const Output& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text_file(o.out, text);
  }
}

void emit(const Output& o, const json& doc) { write_out(o, doc.dump(2) + "\n"); }

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream s;
  const auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      s << r[c];
      if (c + 1 < r.size()) s << std::string(width[c] - r[c].size() + 2, ' ');
    }
    s << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows) line(r);
  return s.str();
}

std::vector<json> read_json_lines(const fs::path& path) {
  std::vector<json> out;
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    ++n;
    if (trim(line).empty()) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::exception& e) {
      fail(ErrorKind::ParseError, path.string() + ":" + std::to_string(n) + ": " + e.what(), n - 1);
    }
  }
  return out;
}

event::IngestMode ingest_mode(bool lenient) {
  return lenient ? event::IngestMode::lenient : event::IngestMode::strict;
}

MatchClock clock_of(const json& j) {
  if (auto it = j.find("clock"); it != j.end()) return parse_game_time(it->get<std::string>());
  return {j.at("half").get<int>(), j.at("offset_s").get<int>()};
}

std::optional<event::Side> side_of(const json& j, const event::MatchMeta& meta) {
  auto it = j.find("team");
  if (it == j.end() || it->is_null()) return std::nullopt;
  const auto s = it->get<std::string>();
  if (s == "home" || fold_name(s) == fold_name(meta.home)) return event::Side::home;
  if (s == "away" || fold_name(s) == fold_name(meta.away)) return event::Side::away;
  fail(ErrorKind::InvalidInput, "team '" + s + "' is neither side of the match");
}

// ---------------- replay / reconcile ----------------

struct ReplayArgs {
  std::string log, at;
  std::size_t history_k = event::kDefaultHistoryK;
  bool inclusive = false;
  bool lenient = false;
};

int run_replay(const ReplayArgs& a, const Output& o) {
  const auto log = event::load_match_log(a.log, ingest_mode(a.lenient));
  const auto state = event::replay(log, parse_game_time(a.at), {a.history_k, a.inclusive});
  emit(o, event::to_json(state, log.meta));
  return 0;
}

struct ReconcileArgs {
  std::string log, goals;
  int window_s = 60;
  bool lenient = false;
};

int run_reconcile(const ReconcileArgs& a, const Output& o) {
  const auto log = event::load_match_log(a.log, ingest_mode(a.lenient));
  const auto secondary = event::secondary_timeline_from_json(read_json_file(a.goals));
  const auto merged = event::reconcile_goal_timelines(log, secondary, {a.window_s});
  emit(o, {{"log", event::to_json(merged.log)}, {"report", event::to_json(merged.report)}});
  return 0;
}

// ---------------- ground / segment / scene ----------------

struct GroundArgs {
  std::string attention;
  double fps = 1.0;
  std::size_t top = grounding::kDefaultTopFrames;
};

int run_ground(const GroundArgs& a, const Output& o) {
  const auto bundle = grounding::attention_from_json(read_json_file(a.attention));
  emit(o, grounding::to_json(grounding::aggregate(bundle, a.top), a.fps));
  return 0;
}

struct SegmentArgs {
  std::string features;
  double threshold = scene::kDefaultShotThreshold;
};

json shots_json(const std::vector<scene::ShotSpan>& shots) {
  json list = json::array();
  for (const auto& s : shots) {
    const auto k = scene::keyframes(s);
    list.push_back({{"start_frame", s.start}, {"end_frame", s.end}, {"keyframes", {k[0], k[1], k[2]}}});
  }
  return list;
}

int run_segment_cmd(const SegmentArgs& a, const Output& o) {
  if (!(a.threshold > 0)) fail(ErrorKind::InvalidInput, "threshold must be positive");
  const auto features = scene::parse_feature_csv(read_text_file(a.features));
  emit(o, {{"threshold", a.threshold}, {"shots", shots_json(scene::detect_shots(features, a.threshold))}});
  return 0;
}

struct SceneArgs {
  std::string shots, views, faces, jerseys, log;
  double tau = scene::kDefaultFaceTau;
  std::string face_score = "similarity";
};

std::vector<scene::ShotSpan> read_shots(const fs::path& p) {
  const auto doc = read_json_file(p);
  const auto& list = doc.is_array() ? doc : doc.at("shots");
  std::vector<scene::ShotSpan> out;
  for (const auto& s : list) out.push_back({s.at("start_frame").get<std::size_t>(), s.at("end_frame").get<std::size_t>()});
  return out;
}

std::vector<scene::View> read_views(const fs::path& p) {
  const auto text = read_text_file(p);
  std::vector<scene::View> out;
  const auto t = trim(text);
  if (!t.empty() && (t.front() == '[' || t.front() == '{')) {
    const auto doc = json::parse(t);
    for (const auto& v : doc.is_array() ? doc : doc.at("views")) out.push_back(scene::parse_view(v.get<std::string>()));
  } else {
    for (const auto& line : split_if(text, [](char c) { return c == '\n'; }))
      if (!trim(line).empty()) out.push_back(scene::parse_view(line));
  }
  return out;
}

std::vector<scene::FaceObservation> read_faces(const fs::path& p) {
  const auto doc = read_json_file(p);
  std::vector<scene::FaceObservation> out;
  for (const auto& f : doc.is_array() ? doc : doc.at("observations"))
    out.push_back({f.at("shot").get<std::size_t>(), f.value("slot", 1),
                   event::player_from_json(f.at("candidate")), f.at("score").get<double>()});
  return out;
}

scene::JerseysByShot read_jerseys(const fs::path& p) {
  const auto doc = read_json_file(p);
  scene::JerseysByShot out;
  for (const auto& [key, value] : doc.items()) {
    std::string text;
    if (value.is_array()) {
      for (const auto& line : value) text += line.get<std::string>() + "\n";
    } else {
      text = value.get<std::string>();
    }
    out[std::stoul(key)] = scene::parse_jersey_lines(text);
  }
  return out;
}

int run_scene(const SceneArgs& a, const Output& o) {
  if (!(a.tau > 0)) fail(ErrorKind::InvalidInput, "tau must be positive");
  const auto shots = read_shots(a.shots);
  const auto views = read_views(a.views);
  std::optional<event::MatchLog> log;
  if (!a.log.empty()) log = event::load_match_log(a.log);

  scene::RecognizedFaces faces;
  if (!a.faces.empty()) {
    if (!log) fail(ErrorKind::InvalidInput, "--faces needs --log for the lineups");
    std::vector<event::PlayerRef> lineup = log->home.players;
    lineup.insert(lineup.end(), log->away.players.begin(), log->away.players.end());
    const auto convention = a.face_score == "distance" ? scene::FaceScore::distance : scene::FaceScore::similarity;
    faces = scene::match_faces(read_faces(a.faces), lineup, a.tau, convention);
  }
  scene::JerseysByShot jerseys;
  if (!a.jerseys.empty()) jerseys = read_jerseys(a.jerseys);

  // Colours come from the jersey records seen in close shots.
  std::optional<scene::TeamColors> colors;
  json ambiguity = nullptr;
  if (log) {
    std::vector<scene::ColorClaim> claims;
    for (const auto& [shot, records] : jerseys) {
      if (shot >= views.size() || !scene::is_close(views[shot])) continue;
      for (const auto& r : records)
        if (!r.color().empty()) claims.push_back({r.color(), r.number()});
    }
    if (!claims.empty()) {
      const scene::TeamColors known{scene::normalize_color(log->meta.home_color),
                                    scene::normalize_color(log->meta.away_color)};
      const auto res = scene::resolve_team_colors(claims, log->home, log->away, known);
      if (const auto* c = std::get_if<scene::TeamColors>(&res)) {
        colors = *c;
      } else {
        const auto& r = std::get<scene::AmbiguityReport>(res);
        ambiguity = {{"candidates", r.candidates}, {"unresolved_claims", r.unresolved_claims}, {"reason", r.reason}};
      }
    }
  }
  auto doc = scene::to_json(scene::build_scene_report(shots, views, faces, jerseys, colors));
  if (!ambiguity.is_null()) doc["color_ambiguity"] = ambiguity;
  emit(o, doc);
  return 0;
}

// ---------------- kb ----------------

struct KbArgs {
  std::string db, query, player;
};

int run_kb_query(const KbArgs& a, const Output& o) {
  const auto store = stats::StatStore::load(a.db);
  const auto q = stats::parse_query(a.query);
  auto doc = stats::to_json(stats::execute(store, q));
  doc["query"] = stats::print_query(q);
  emit(o, doc);
  return 0;
}

int run_kb_background(const KbArgs& a, const Output& o) {
  const auto store = stats::StatStore::load(a.db);
  emit(o, stats::to_json(stats::player_background(store, a.player)));
  return 0;
}

// ---------------- pipeline ----------------

struct PipelineArgs {
  std::string segment, client, record, db, out;
  std::size_t jobs = 1;
  std::size_t top_k = grounding::kDefaultTopFrames;
  std::size_t history_k = event::kDefaultHistoryK;
};

int run_pipeline(const PipelineArgs& a, const Output& o) {
  const auto bundles = pipeline::load_segment_bundles(a.segment);
  stats::StatStore store;
  if (!a.db.empty()) store = stats::StatStore::load(a.db);
  if (a.jobs == 0) fail(ErrorKind::InvalidInput, "--jobs must be at least 1");
  const pipeline::RunOptions opts{a.top_k, a.history_k, a.jobs};

  std::vector<pipeline::SegmentRun> runs;
  std::optional<RecordedStore> recorded;
  const std::string prefix = "recorded:";
  if (a.client.starts_with(prefix)) {
    recorded = RecordedStore::load(a.client.substr(prefix.size()));
    RecordedClient client(*recorded);
    runs = pipeline::run_segments(bundles, store, client, opts);
  } else {
    const auto endpoint = resolve_endpoint(a.client.empty() ? std::nullopt : std::optional(a.client));
    if (!endpoint) fail(ErrorKind::InvalidInput, std::string("no client: pass --client or set ") + kEndpointEnv);
    HttpClient live(*endpoint);
    if (!a.record.empty()) {
      recorded = RecordedStore::load(a.record);
      RecordingClient client(live, *recorded);
      runs = pipeline::run_segments(bundles, store, client, opts);
      recorded->save(a.record);
    } else {
      runs = pipeline::run_segments(bundles, store, live, opts);
    }
  }

  json docs = json::array();
  int code = 0;
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : runs) {
    docs.push_back(pipeline::to_json(r));
    if (r.error_kind) {
      code = std::max(code, *r.error_kind == ErrorKind::ClientError ? kExitClient : kExitInput);
      rows.push_back({r.segment_id, "error", std::string(error_kind_name(*r.error_kind)) + ": " + r.error});
    } else {
      rows.push_back({r.segment_id, "ok", r.result->c_ke.body()});
    }
  }
  if (o.pretty)
    write_out(o, table({"segment", "status", "C_KE / error"}, rows));
  else
    emit(o, {{"segments", docs}});
  return code;
}

// ---------------- eval ----------------

struct EvalArgs {
  std::string preds, commentary, log, db, labels;
  bool strict_scoreline = false;
};

int run_eval_align(const EvalArgs& a, const Output& o) {
  std::vector<eval::PredictionRecord> recs;
  for (const auto& j : read_json_lines(a.preds)) recs.push_back(eval::prediction_from_json(j));
  const auto report = eval::alignment_accuracy(recs);
  if (!o.pretty) {
    emit(o, eval::to_json(report));
    return 0;
  }
  const auto fmt = [](double v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return std::string(buf);
  };
  std::vector<std::vector<std::string>> rows;
  const auto add = [&](const std::string& name, const eval::AccuracyRow& r) {
    rows.push_back({name, std::to_string(r.records), fmt(r.player_at_1), fmt(r.player_at_3), fmt(r.team)});
  };
  add("overall", report.overall);
  if (report.open) add("open", *report.open);
  if (report.given_team) add("given_team", *report.given_team);
  write_out(o, table({"variant", "records", "player@1", "player@3", "team"}, rows));
  return 0;
}

int run_eval_verify(const EvalArgs& a, const Output& o) {
  const auto log = event::load_match_log(a.log);
  std::optional<stats::StatStore> store;
  if (!a.db.empty()) store = stats::StatStore::load(a.db);

  std::vector<eval::Claim> all_claims;
  std::vector<eval::Verdict> all_verdicts;
  json rows_json = json::array();
  std::vector<std::vector<std::string>> rows;
  std::size_t n = 0;
  for (const auto& j : read_json_lines(a.commentary)) {
    const auto segment = j.value("segment_id", std::to_string(n++));
    const auto clock = clock_of(j);
    std::optional<std::string> actor;
    if (auto it = j.find("actor"); it != j.end() && !it->is_null()) actor = it->get<std::string>();
    auto claims = eval::extract_claims(j.at("body").get<std::string>(), {&log, clock, side_of(j, log.meta), actor});
    for (const auto& ann : j.value("annotations", json::array()))
      claims.push_back(eval::external_stat_claim(ann.at("dsl").get<std::string>(), ann.at("claimed"),
                                                 ann.value("span", std::string())));
    const auto verdicts = eval::verify_claims(claims, log, clock, store ? &*store : nullptr, {a.strict_scoreline});
    for (std::size_t i = 0; i < claims.size(); ++i) {
      auto row = eval::to_json(verdicts[i]);
      row["segment_id"] = segment;
      row["claim"] = eval::to_json(claims[i]);
      row["span"] = claims[i].span_text;
      rows_json.push_back(row);
      rows.push_back({segment, claims[i].span_text, std::string(eval::to_string(verdicts[i].status)),
                      cell(verdicts[i].expected), cell(verdicts[i].claimed)});
      all_claims.push_back(claims[i]);
      all_verdicts.push_back(verdicts[i]);
    }
  }
  const auto summary = eval::summarize(all_claims, all_verdicts);
  if (o.pretty) {
    auto text = table({"segment", "span", "status", "expected", "claimed"}, rows);
    text += "\n" + eval::to_json(summary).dump() + "\n";
    write_out(o, text);
  } else {
    emit(o, {{"verdicts", rows_json}, {"summary", eval::to_json(summary)}});
  }
  const bool contradicted = std::any_of(all_verdicts.begin(), all_verdicts.end(), [](const eval::Verdict& v) {
    return v.status == eval::VerdictStatus::contradicted;
  });
  return contradicted ? kExitContradicted : 0;
}

int run_eval_structure(const EvalArgs& a, const Output& o) {
  const auto text = read_text_file(a.labels);
  std::vector<eval::FacetSet> labels;
  const auto t = trim(text);
  if (!t.empty() && (t.front() == '[' || t.front() == '{')) {
    const auto doc = json::parse(t);
    const auto& list = doc.is_array() ? doc : doc.at("labels");
    if (list.is_string()) {
      labels = eval::parse_label_list(list.get<std::string>());
    } else {
      for (const auto& l : list) labels.push_back(eval::parse_facet_label(l.get<std::string>()));
    }
  } else {
    labels = eval::parse_label_list(t);
  }
  const auto tally = eval::structure_tally(labels);
  if (o.pretty) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "description %.1f%%  explanation %.1f%%  comment %.1f%%  low_description %s\n",
                  tally.description, tally.explanation, tally.comment, tally.low_description ? "yes" : "no");
    write_out(o, buf);
  } else {
    emit(o, eval::to_json(tally));
  }
  return 0;
}

void report_error(ErrorKind kind, const std::string& message, std::optional<std::size_t> index) {
  json err = {{"kind", error_kind_name(kind)}, {"message", message}};
  if (index) err["index"] = *index;
  std::cerr << json{{"error", err}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pitchside: match-state replay, grounding, scene analysis, statistics and commentary evaluation"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "0.1.0");
  Output out;
  app.add_flag("--pretty", out.pretty, "Human-readable tables instead of JSON");
  app.add_option("--out", out.out, "Write the document to this file instead of stdout");

  int code = 0;

  ReplayArgs replay;
  auto* c_replay = app.add_subcommand("replay", "Match state at a game time");
  c_replay->add_option("--log", replay.log, "Match log JSON")->required()->check(CLI::ExistingFile);
  c_replay->add_option("--at", replay.at, "Game time, H:MM:SS or 'H - MM:SS'")->required();
  c_replay->add_option("--history-k", replay.history_k, "Commentary history length")->check(CLI::PositiveNumber);
  c_replay->add_flag("--inclusive", replay.inclusive, "Include events at exactly --at");
  c_replay->add_flag("--lenient", replay.lenient, "Lenient ingest (unknown fields ignored)");
  c_replay->callback([&] { code = run_replay(replay, out); });

  ReconcileArgs rec;
  auto* c_rec = app.add_subcommand("reconcile", "Restore goals missing from a log using a second timeline");
  c_rec->add_option("--log", rec.log, "Match log JSON")->required()->check(CLI::ExistingFile);
  c_rec->add_option("--goals", rec.goals, "Secondary goal timeline JSON")->required()->check(CLI::ExistingFile);
  c_rec->add_option("--window", rec.window_s, "Matching window in seconds")->check(CLI::PositiveNumber);
  c_rec->add_flag("--lenient", rec.lenient, "Lenient ingest");
  c_rec->callback([&] { code = run_reconcile(rec, out); });

  GroundArgs ground;
  auto* c_ground = app.add_subcommand("ground", "Frame relevance from cross-attention");
  c_ground->add_option("--attention", ground.attention, "Attention bundle JSON")->required()->check(CLI::ExistingFile);
  c_ground->add_option("--fps", ground.fps, "Frames per second of the attended clip")->check(CLI::PositiveNumber);
  c_ground->add_option("--top", ground.top, "How many frames to report")->check(CLI::PositiveNumber);
  c_ground->callback([&] { code = run_ground(ground, out); });

  SegmentArgs seg;
  auto* c_seg = app.add_subcommand("segment", "Shot boundaries from per-frame features");
  c_seg->add_option("--features", seg.features, "Feature CSV (frame_index,c1,c2,...)")->required()->check(CLI::ExistingFile);
  c_seg->add_option("--threshold", seg.threshold, "Content-difference cut threshold");
  c_seg->callback([&] { code = run_segment_cmd(seg, out); });

  SceneArgs sc;
  auto* c_scene = app.add_subcommand("scene", "Assemble a scene report");
  c_scene->add_option("--shots", sc.shots, "Shot list JSON (output of 'segment')")->required()->check(CLI::ExistingFile);
  c_scene->add_option("--views", sc.views, "View labels, one per shot (JSON list or lines)")->required()->check(CLI::ExistingFile);
  c_scene->add_option("--faces", sc.faces, "Face observations JSON")->check(CLI::ExistingFile);
  c_scene->add_option("--jerseys", sc.jerseys, "Jersey recognizer output per shot JSON")->check(CLI::ExistingFile);
  c_scene->add_option("--log", sc.log, "Match log supplying lineups and known colours")->check(CLI::ExistingFile);
  c_scene->add_option("--tau", sc.tau, "Face match threshold");
  c_scene->add_option("--face-score", sc.face_score, "How face scores read")
      ->check(CLI::IsMember({"similarity", "distance"}));
  c_scene->callback([&] { code = run_scene(sc, out); });

  KbArgs kb;
  auto* c_kb = app.add_subcommand("kb", "Statistics store");
  c_kb->require_subcommand(1);
  auto* c_kbq = c_kb->add_subcommand("query", "Run one DSL query");
  c_kbq->add_option("--db", kb.db, "Statistics directory (matches.csv, stat_events.csv, players.csv)")
      ->required()->check(CLI::ExistingDirectory);
  c_kbq->add_option("--q", kb.query, "DSL query text")->required();
  c_kbq->callback([&] { code = run_kb_query(kb, out); });
  auto* c_kbb = c_kb->add_subcommand("background", "Player background row");
  c_kbb->add_option("--db", kb.db, "Statistics directory")->required()->check(CLI::ExistingDirectory);
  c_kbb->add_option("--player", kb.player, "Player name")->required();
  c_kbb->callback([&] { code = run_kb_background(kb, out); });

  PipelineArgs pl;
  auto* c_pl = app.add_subcommand("pipeline", "Two-stage commentary pipeline");
  c_pl->require_subcommand(1);
  auto* c_run = c_pl->add_subcommand("run", "Run both stages over segment bundles");
  c_run->add_option("--segment", pl.segment, "Segment bundle JSON")->required()->check(CLI::ExistingFile);
  c_run->add_option("--client", pl.client,
                    std::string("recorded:PATH or an endpoint URL; ") + kEndpointEnv + " overrides an endpoint");
  c_run->add_option("--record", pl.record, "Store endpoint responses in this recorded store");
  c_run->add_option("--db", pl.db, "Statistics directory")->check(CLI::ExistingDirectory);
  c_run->add_option("--jobs", pl.jobs, "Segments processed in parallel")->check(CLI::PositiveNumber);
  c_run->add_option("--top-k", pl.top_k, "Relevant seconds in the prompt")->check(CLI::PositiveNumber);
  c_run->add_option("--history-k", pl.history_k, "Commentary history length")->check(CLI::PositiveNumber);
  c_run->callback([&] { code = run_pipeline(pl, out); });

  EvalArgs ev;
  auto* c_eval = app.add_subcommand("eval", "Evaluation kit");
  c_eval->require_subcommand(1);
  auto* c_align = c_eval->add_subcommand("align", "Entity-alignment accuracy");
  c_align->add_option("--preds", ev.preds, "Prediction records, one JSON per line")->required()->check(CLI::ExistingFile);
  c_align->callback([&] { code = run_eval_align(ev, out); });
  auto* c_verify = c_eval->add_subcommand("verify", "Check commentary claims against the log and store");
  c_verify->add_option("--commentary", ev.commentary, "Commentary lines, one JSON per line")->required()->check(CLI::ExistingFile);
  c_verify->add_option("--log", ev.log, "Match log JSON")->required()->check(CLI::ExistingFile);
  c_verify->add_option("--db", ev.db, "Statistics directory for annotated claims")->check(CLI::ExistingDirectory);
  c_verify->add_flag("--strict-scoreline", ev.strict_scoreline, "Reject away-home scorelines");
  c_verify->callback([&] { code = run_eval_verify(ev, out); });
  auto* c_struct = c_eval->add_subcommand("structure", "Sentence-role composition");
  c_struct->add_option("--labels", ev.labels, "Numbered label list, or a JSON list of labels")->required()->check(CLI::ExistingFile);
  c_struct->callback([&] { code = run_eval_structure(ev, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : kExitInput;
  } catch (const Error& e) {
    report_error(e.kind(), e.what(), e.index());
    return e.kind() == ErrorKind::ClientError ? kExitClient : kExitInput;
  } catch (const json::exception& e) {
    report_error(ErrorKind::ParseError, e.what(), std::nullopt);
    return kExitInput;
  } catch (const std::exception& e) {
    report_error(ErrorKind::InvalidInput, e.what(), std::nullopt);
    return kExitInput;
  }
  return code;
}
