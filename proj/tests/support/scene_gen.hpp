#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "match_gen.hpp"
#include "pitchside/scene/faces.hpp"
#include "pitchside/scene/shots.hpp"

namespace pitchside::testing {

/// Random integer-valued difference sequence mixing calm stretches, jumps and
/// values sitting exactly on the threshold. Integer values keep the feature
/// round trip in features_for exact.
inline std::vector<double> random_differences(std::mt19937_64& rng, int threshold) {
  std::uniform_int_distribution<int> len(0, 300);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> calm(0, threshold - 1);
  std::uniform_int_distribution<int> jump(threshold + 1, 4 * threshold);
  std::vector<double> d(static_cast<std::size_t>(len(rng)));
  for (auto& v : d) {
    const int k = kind(rng);
    v = k < 7 ? calm(rng) : k < 9 ? jump(rng) : threshold;
  }
  return d;
}

/// Boundaries by a direct scan: shot starts are 0 and every n with d[n-1] > thr.
inline std::vector<std::size_t> oracle_shot_starts(const std::vector<double>& d, double thr) {
  std::vector<std::size_t> starts{0};
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > thr) starts.push_back(i + 1);
  return starts;
}

/// Frame features whose consecutive mean absolute difference equals `d`
/// (single channel walking up and down).
inline std::vector<pitchside::scene::FrameFeature> features_for(const std::vector<double>& d) {
  std::vector<pitchside::scene::FrameFeature> f;
  double x = 128.0;
  f.push_back({0, {x}});
  for (std::size_t i = 0; i < d.size(); ++i) {
    x += (i % 2 == 0) ? d[i] : -d[i];
    f.push_back({i + 1, {x}});
  }
  return f;
}

inline std::vector<pitchside::scene::FaceObservation> random_observations(
    std::mt19937_64& rng, const std::vector<pitchside::event::PlayerRef>& lineup,
    std::size_t shots, std::size_t count) {
  std::uniform_int_distribution<std::size_t> shot(0, shots - 1);
  std::uniform_int_distribution<std::size_t> who(0, lineup.size() - 1);
  std::uniform_int_distribution<int> slot(1, 3);
  std::uniform_real_distribution<double> score(0.0, 1.0);
  std::vector<pitchside::scene::FaceObservation> obs;
  for (std::size_t i = 0; i < count; ++i)
    obs.push_back({shot(rng), slot(rng), lineup[who(rng)], score(rng)});
  return obs;
}

/// Set of (shot, player name) pairs from a recognition result.
inline std::set<std::pair<std::size_t, std::string>> face_pairs(
    const pitchside::scene::RecognizedFaces& r) {
  std::set<std::pair<std::size_t, std::string>> out;
  for (const auto& [shot, players] : r)
    for (const auto& p : players) out.emplace(shot, p.name);
  return out;
}

}  // namespace pitchside::testing
