#pragma once

#include <random>
#include <vector>

#include "pitchside/grounding/attention.hpp"

namespace pitchside::testing {

struct RawBundle {
  std::size_t L, H, Q, N;
  std::vector<double> attention;
  std::vector<double> norms;

  grounding::AttentionBundle make() const { return {L, H, Q, N, attention, norms}; }
};

/// Random dims up to 4 x 4 x 8 x 32. With `row_stochastic`, every
/// (layer, head, query) row is normalized to sum to one.
inline RawBundle random_bundle(std::mt19937_64& rng, bool row_stochastic) {
  std::uniform_int_distribution<std::size_t> dl(1, 4), dh(1, 4), dq(1, 8), dn(1, 32);
  std::uniform_real_distribution<double> u(0.0, 1.0), norm(0.0, 5.0);
  RawBundle b{dl(rng), dh(rng), dq(rng), dn(rng), {}, {}};
  b.attention.resize(b.L * b.H * b.Q * b.N);
  for (auto& a : b.attention) a = u(rng);
  if (row_stochastic) {
    for (std::size_t r = 0; r < b.L * b.H * b.Q; ++r) {
      double sum = 0;
      for (std::size_t n = 0; n < b.N; ++n) sum += b.attention[r * b.N + n];
      for (std::size_t n = 0; n < b.N; ++n) b.attention[r * b.N + n] /= sum;
    }
  }
  b.norms.resize(b.Q);
  for (auto& v : b.norms) v = norm(rng);
  b.norms[0] += 0.1;  // keep at least one norm positive
  return b;
}

/// Naive quadruple loop straight from the definition: for every frame, sum
/// over queries of (norm share) x (average over layers and heads).
inline std::vector<double> oracle_frame_weights(const RawBundle& b) {
  double norm_total = 0;
  for (double v : b.norms) norm_total += v;
  std::vector<double> w(b.N, 0.0);
  for (std::size_t n = 0; n < b.N; ++n)
    for (std::size_t q = 0; q < b.Q; ++q) {
      double mean = 0;
      for (std::size_t l = 0; l < b.L; ++l)
        for (std::size_t h = 0; h < b.H; ++h)
          mean += b.attention[((l * b.H + h) * b.Q + q) * b.N + n];
      mean /= static_cast<double>(b.L * b.H);
      w[n] += (b.norms[q] / norm_total) * mean;
    }
  return w;
}

}  // namespace pitchside::testing
