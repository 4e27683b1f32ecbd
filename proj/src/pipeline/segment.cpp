#include "pitchside/pipeline/segment.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "pitchside/common/client.hpp"
#include "pitchside/common/files.hpp"
#include "pitchside/event/io.hpp"

namespace pitchside::pipeline {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

SegmentBundle bundle_from_json(const json& j, const fs::path& base) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "segment bundle must be an object");
  const auto str = [&](const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_string())
      fail(ErrorKind::ParseError, std::string("segment bundle needs a string '") + key + "'");
    return it->get<std::string>();
  };
  const auto path = [&](const char* key) { return base / str(key); };
  const auto it_c = j.find("commentary");
  if (it_c == j.end()) fail(ErrorKind::ParseError, "segment bundle needs 'commentary'");
  SegmentBundle b{str("segment_id"), path("match_log"), std::nullopt, path("attention"), 1.0,
                  str("video"), commentary_from_json(*it_c), std::nullopt, AnswerFormat::json};
  if (j.contains("scene") && !j["scene"].is_null()) b.scene = path("scene");
  if (j.contains("attention_fps")) b.attention_fps = j["attention_fps"].get<double>();
  if (j.contains("given_team") && !j["given_team"].is_null())
    b.given_team = event::parse_side(str("given_team"));
  if (j.contains("answer_format")) b.format = parse_answer_format(str("answer_format"));
  return b;
}

/// Records the digest of every request passing through.
class DigestTap final : public Client {
 public:
  explicit DigestTap(Client& inner) : inner_(inner) {}
  std::string complete(const json& request) override {
    digests.push_back(request_digest(request));
    return inner_.complete(request);
  }
  std::vector<std::string> digests;

 private:
  Client& inner_;
};

}  // namespace

std::vector<SegmentBundle> load_segment_bundles(const fs::path& path) {
  const auto doc = read_json_file(path);
  const auto base = path.parent_path();
  std::vector<SegmentBundle> out;
  try {
    if (doc.is_object() && doc.contains("segments")) {
      for (const auto& s : doc["segments"]) out.push_back(bundle_from_json(s, base));
    } else {
      out.push_back(bundle_from_json(doc, base));
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
  return out;
}

SegmentResult run_segment(const SegmentBundle& bundle, const stats::StatStore& store,
                          Client& client, const RunOptions& options) {
  const auto log = event::load_match_log(bundle.match_log);
  StageOneInputs in{bundle.segment_id,
                    &log,
                    bundle.scene ? scene::scene_report_from_json(read_json_file(*bundle.scene))
                                 : scene::SceneReport{},
                    grounding::aggregate(grounding::attention_from_json(read_json_file(bundle.attention)),
                                         options.top_k),
                    bundle.c_a,
                    bundle.video,
                    {bundle.given_team, bundle.format, bundle.attention_fps},
                    options.history_k};
  DigestTap tap(client);
  auto stage1 = run_stage1(in, tap);
  try {
    auto external = gather_external(stage1.c_ea, log.meta, store, tap);
    auto internal = internal_knowledge(log, stage1.c_ea, stage1.player, &store);
    auto c_ke = run_stage2(stage1.c_ea, log.meta, internal, external.validation.kept, tap);
    return {bundle.segment_id, std::move(stage1), std::move(external), std::move(internal),
            std::move(c_ke), std::move(tap.digests)};
  } catch (const Error& e) {
    fail(e.kind(), "segment " + bundle.segment_id + ": " + e.what(), e.index());
  }
}

std::vector<SegmentRun> run_segments(const std::vector<SegmentBundle>& bundles,
                                     const stats::StatStore& store, Client& client,
                                     const RunOptions& options) {
  std::vector<SegmentRun> runs(bundles.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < bundles.size(); i = next++) {
      auto& run = runs[i];
      run.segment_id = bundles[i].segment_id;
      try {
        run.result = run_segment(bundles[i], store, client, options);
      } catch (const Error& e) {
        run.error_kind = e.kind();
        run.error = e.what();
      }
    }
  };
  const auto jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(bundles.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  return runs;
}

json to_json(const SegmentResult& r) {
  json questions = json::array();
  for (const auto& q : r.external.outcomes) questions.push_back(to_json(q));
  json kept = json::array(), discarded = json::array();
  for (const auto& a : r.external.validation.kept) kept.push_back(stats::render_answer(a));
  for (const auto& a : r.external.validation.discarded) discarded.push_back(stats::render_answer(a));
  return {{"segment_id", r.segment_id},
          {"stage1", to_json(r.stage1)},
          {"c_ea", to_json(r.stage1.c_ea)},
          {"questions", std::move(questions)},
          {"external", {{"kept", std::move(kept)}, {"discarded", std::move(discarded)}}},
          {"internal", r.internal},
          {"c_ke", to_json(r.c_ke)},
          {"digests", r.digests}};
}

json to_json(const SegmentRun& r) {
  if (r.result) return to_json(*r.result);
  return {{"segment_id", r.segment_id},
          {"error", {{"kind", r.error_kind ? error_kind_name(*r.error_kind) : "Unknown"},
                     {"message", r.error}}}};
}

}  // namespace pitchside::pipeline
