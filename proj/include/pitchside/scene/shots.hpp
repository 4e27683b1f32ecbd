#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace pitchside::scene {

/// Content-detector threshold, calibrated to 0-255 scaled channels.
inline constexpr double kDefaultShotThreshold = 16.0;
/// Frame rate at which shot detection runs.
inline constexpr double kShotDetectionFps = 25.0;

struct FrameFeature {
  std::size_t frame_index = 0;
  std::vector<double> channels;
};

/// Half-open frame interval [start, end).
struct ShotSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const noexcept { return end - start; }
  bool operator==(const ShotSpan&) const = default;
};

/// Mean absolute channel difference between each frame and its predecessor;
/// element i compares frames i and i+1. Checks that indices run 0..N-1 and
/// that every frame has the same channel count.
std::vector<double> content_differences(std::span<const FrameFeature> features);

/// Cuts before frame n whenever the difference between frames n-1 and n
/// exceeds `threshold`. The result partitions [0, N). Throws EmptySequence
/// and InvalidInput.
std::vector<ShotSpan> detect_shots(std::span<const FrameFeature> features,
                                   double threshold = kDefaultShotThreshold);

/// Same cut rule applied to precomputed differences for `frame_count` frames.
std::vector<ShotSpan> shots_from_differences(std::span<const double> differences,
                                             std::size_t frame_count, double threshold);

/// First, middle and last frame of a shot, used as the three keyframes.
std::array<std::size_t, 3> keyframes(const ShotSpan& shot);

/// CSV with a header row, columns `frame_index,c1,c2,...`.
std::vector<FrameFeature> parse_feature_csv(std::string_view text);

}  // namespace pitchside::scene
