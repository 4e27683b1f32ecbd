#include "pitchside/scene/faces.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "pitchside/common/error.hpp"

namespace pitchside::scene {

RecognizedFaces match_faces(std::span<const FaceObservation> observations,
                            std::span<const event::PlayerRef> lineup, double tau,
                            FaceScore convention) {
  if (!(tau > 0.0 && tau < 1.0) && convention == FaceScore::similarity)
    fail(ErrorKind::InvalidInput, "tau must lie in (0, 1)");
  if (!(tau > 0.0)) fail(ErrorKind::InvalidInput, "tau must be positive");

  auto lineup_pos = [&](const event::PlayerRef& p) -> std::size_t {
    auto it = std::find(lineup.begin(), lineup.end(), p);
    if (it == lineup.end())
      fail(ErrorKind::CandidateNotInLineup, "face candidate " + p.name + " is not in the lineup");
    return static_cast<std::size_t>(it - lineup.begin());
  };

  // (shot, lineup position) -> best score over keyframe slots
  std::map<std::pair<std::size_t, std::size_t>, double> best;
  for (const auto& o : observations) {
    if (o.keyframe_slot < 1 || o.keyframe_slot > 3)
      fail(ErrorKind::InvalidInput, "keyframe slot must be 1, 2 or 3");
    if (!std::isfinite(o.score) ||
        (convention == FaceScore::similarity && (o.score < 0.0 || o.score > 1.0)))
      fail(ErrorKind::InvalidInput, "face similarity must lie in [0, 1]");
    const auto key = std::make_pair(o.shot_index, lineup_pos(o.candidate));
    auto [it, inserted] = best.try_emplace(key, o.score);
    if (!inserted)
      it->second = convention == FaceScore::similarity ? std::max(it->second, o.score)
                                                       : std::min(it->second, o.score);
  }

  RecognizedFaces out;
  for (const auto& [key, score] : best) {
    const bool hit = convention == FaceScore::similarity ? score > tau : score < tau;
    if (hit) out[key.first].push_back(lineup[key.second]);
  }
  return out;
}

}  // namespace pitchside::scene
