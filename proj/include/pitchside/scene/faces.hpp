#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "pitchside/event/types.hpp"

namespace pitchside::scene {

inline constexpr double kDefaultFaceTau = 0.6;

/// One face-vs-candidate comparison from a keyframe of a shot.
struct FaceObservation {
  std::size_t shot_index = 0;
  int keyframe_slot = 1;  // 1..3
  event::PlayerRef candidate;
  double score = 0.0;
};

/// How `FaceObservation::score` is read. `similarity` (the default) matches
/// when the best slot score is strictly above tau; `distance` matches when the
/// best (smallest) slot score is strictly below tau.
enum class FaceScore { similarity, distance };

/// Shot index -> recognized players, each list in lineup order. Shots with no
/// match are absent. Throws CandidateNotInLineup and InvalidInput.
using RecognizedFaces = std::map<std::size_t, std::vector<event::PlayerRef>>;

RecognizedFaces match_faces(std::span<const FaceObservation> observations,
                            std::span<const event::PlayerRef> lineup, double tau = kDefaultFaceTau,
                            FaceScore convention = FaceScore::similarity);

}  // namespace pitchside::scene
