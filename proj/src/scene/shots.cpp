#include "pitchside/scene/shots.hpp"

#include <cmath>
#include <string>

#include "pitchside/common/csv.hpp"
#include "pitchside/common/error.hpp"
#include "pitchside/common/text.hpp"

namespace pitchside::scene {

std::vector<double> content_differences(std::span<const FrameFeature> features) {
  if (features.empty()) fail(ErrorKind::EmptySequence, "no frames");
  const std::size_t width = features.front().channels.size();
  if (width == 0) fail(ErrorKind::InvalidInput, "frame features have no channels");
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (features[i].frame_index != i)
      fail(ErrorKind::InvalidInput, "frame indices must run 0..N-1; found " +
                                        std::to_string(features[i].frame_index) + " at row " +
                                        std::to_string(i));
    if (features[i].channels.size() != width)
      fail(ErrorKind::InvalidInput, "frame " + std::to_string(i) + " has a different channel count");
  }

  std::vector<double> diffs;
  diffs.reserve(features.size() - 1);
  for (std::size_t i = 1; i < features.size(); ++i) {
    const auto& a = features[i - 1].channels;
    const auto& b = features[i].channels;
    double sum = 0.0;
    for (std::size_t c = 0; c < width; ++c) sum += std::abs(b[c] - a[c]);
    diffs.push_back(sum / static_cast<double>(width));
  }
  return diffs;
}

std::vector<ShotSpan> shots_from_differences(std::span<const double> differences,
                                             std::size_t frame_count, double threshold) {
  if (frame_count == 0) fail(ErrorKind::EmptySequence, "no frames");
  if (!(threshold > 0.0)) fail(ErrorKind::InvalidInput, "threshold must be positive");
  if (differences.size() + 1 != frame_count)
    fail(ErrorKind::LengthMismatch, "expected one difference per adjacent frame pair");

  std::vector<ShotSpan> shots;
  std::size_t start = 0;
  for (std::size_t n = 1; n < frame_count; ++n) {
    if (differences[n - 1] > threshold) {
      shots.push_back({start, n});
      start = n;
    }
  }
  shots.push_back({start, frame_count});
  return shots;
}

std::vector<ShotSpan> detect_shots(std::span<const FrameFeature> features, double threshold) {
  const auto diffs = content_differences(features);
  return shots_from_differences(diffs, features.size(), threshold);
}

std::array<std::size_t, 3> keyframes(const ShotSpan& shot) {
  if (shot.end <= shot.start) fail(ErrorKind::InvalidInput, "empty shot");
  return {shot.start, shot.start + (shot.length() - 1) / 2, shot.end - 1};
}

std::vector<FrameFeature> parse_feature_csv(std::string_view text) {
  const auto rows = parse_csv(text);
  if (rows.empty()) fail(ErrorKind::EmptySequence, "feature CSV is empty");
  if (rows.front().empty() || ascii_lower(trim(rows.front().front())) != "frame_index")
    fail(ErrorKind::ParseError, "feature CSV must start with a frame_index header");

  std::vector<FrameFeature> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != rows.front().size())
      fail(ErrorKind::ParseError, "feature CSV row " + std::to_string(r) + " has the wrong width");
    FrameFeature f;
    try {
      std::size_t used = 0;
      const auto idx = std::stoll(row[0], &used);
      if (idx < 0 || used != row[0].size()) throw std::invalid_argument(row[0]);
      f.frame_index = static_cast<std::size_t>(idx);
      for (std::size_t c = 1; c < row.size(); ++c) f.channels.push_back(std::stod(row[c]));
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "feature CSV row " + std::to_string(r) + " is not numeric");
    }
    out.push_back(std::move(f));
  }
  if (out.empty()) fail(ErrorKind::EmptySequence, "feature CSV has no frames");
  return out;
}

}  // namespace pitchside::scene
