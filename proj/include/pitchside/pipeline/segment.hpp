#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pitchside/common/error.hpp"
#include "pitchside/pipeline/alignment.hpp"
#include "pitchside/pipeline/knowledge.hpp"

namespace pitchside::pipeline {

/// Inputs of one segment. Paths are resolved against the bundle file's
/// directory. Document form:
///   {segment_id, match_log, scene?, attention, attention_fps?, video,
///    commentary:{body, clock, label}, given_team?, answer_format?}
/// A file may also hold {"segments": [...]}.
struct SegmentBundle {
  std::string segment_id;
  std::filesystem::path match_log;
  std::optional<std::filesystem::path> scene;
  std::filesystem::path attention;
  double attention_fps = 1.0;
  std::string video;
  Commentary c_a;
  std::optional<event::Side> given_team;
  AnswerFormat format = AnswerFormat::json;
};

std::vector<SegmentBundle> load_segment_bundles(const std::filesystem::path& path);

struct SegmentResult {
  std::string segment_id;
  StageOneResult stage1;
  ExternalKnowledge external;
  std::string internal;
  Commentary c_ke;
  std::vector<std::string> digests;  // every request, in issue order
};

struct SegmentRun {
  std::string segment_id;
  std::optional<SegmentResult> result;
  std::optional<ErrorKind> error_kind;
  std::string error;
};

struct RunOptions {
  std::size_t top_k = grounding::kDefaultTopFrames;
  std::size_t history_k = event::kDefaultHistoryK;
  std::size_t jobs = 1;
};

/// Stage I then Stage II for one segment.
SegmentResult run_segment(const SegmentBundle& bundle, const stats::StatStore& store,
                          Client& client, const RunOptions& options = {});

/// Runs segments on up to `options.jobs` threads. Results keep input order
/// and a failing segment does not stop the others.
std::vector<SegmentRun> run_segments(const std::vector<SegmentBundle>& bundles,
                                     const stats::StatStore& store, Client& client,
                                     const RunOptions& options = {});

nlohmann::json to_json(const SegmentResult& r);
nlohmann::json to_json(const SegmentRun& r);

}  // namespace pitchside::pipeline
