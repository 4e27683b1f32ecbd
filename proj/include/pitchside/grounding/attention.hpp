#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "json.hpp"

namespace pitchside::grounding {

inline constexpr std::size_t kDefaultTopFrames = 5;

/// Cross-attention weights exported from a query-based video encoder,
/// indexed (layer, head, query, frame) in row-major order, plus the L2 norm
/// of each query's output vector.
class AttentionBundle {
 public:
  /// Throws DimensionMismatch when the payload length is not L*H*Q*N or the
  /// norm count is not Q, InvalidInput on negative or non-finite entries and
  /// AllZeroNorms when no query norm is positive.
  AttentionBundle(std::size_t layers, std::size_t heads, std::size_t queries, std::size_t frames,
                  std::vector<double> attention, std::vector<double> query_norms);

  std::size_t layers() const noexcept { return layers_; }
  std::size_t heads() const noexcept { return heads_; }
  std::size_t queries() const noexcept { return queries_; }
  std::size_t frames() const noexcept { return frames_; }

  double at(std::size_t layer, std::size_t head, std::size_t query, std::size_t frame) const {
    return attention_[((layer * heads_ + head) * queries_ + query) * frames_ + frame];
  }
  std::span<const double> attention() const noexcept { return attention_; }
  std::span<const double> query_norms() const noexcept { return query_norms_; }

 private:
  std::size_t layers_, heads_, queries_, frames_;
  std::vector<double> attention_;
  std::vector<double> query_norms_;
};

/// Dense row-major rows x cols matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(values).subspan(r * cols, cols);
  }
};

struct FrameRelevance {
  std::vector<double> weights;   // one per frame
  std::vector<std::size_t> top;  // frame indices, heaviest first
};

/// Q x N attention averaged over every layer and head.
Matrix mean_attention(const AttentionBundle& bundle);

/// Each query's share of the total output norm. Throws AllZeroNorms.
std::vector<double> query_importance(std::span<const double> query_norms);
std::vector<double> query_importance(const AttentionBundle& bundle);

/// Frame weights as the importance-weighted sum of the mean attention rows,
/// plus the `top_k` heaviest frames (ties go to the earlier frame).
FrameRelevance aggregate(const AttentionBundle& bundle, std::size_t top_k = kDefaultTopFrames);

/// Indices of the k largest values, descending, lower index first on ties.
std::vector<std::size_t> top_indices(std::span<const double> values, std::size_t k);

/// Converts top frame indices to seconds. Throws InvalidInput if fps <= 0.
std::vector<double> top_frames_to_seconds(const FrameRelevance& rel, double fps);

/// {layers,heads,queries,frames,attention:[...],query_norms:[...]}
AttentionBundle attention_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const FrameRelevance& rel, double fps);

}  // namespace pitchside::grounding
