#include "pitchside/grounding/attention.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pitchside/common/error.hpp"

namespace pitchside::grounding {

AttentionBundle::AttentionBundle(std::size_t layers, std::size_t heads, std::size_t queries,
                                 std::size_t frames, std::vector<double> attention,
                                 std::vector<double> query_norms)
    : layers_(layers),
      heads_(heads),
      queries_(queries),
      frames_(frames),
      attention_(std::move(attention)),
      query_norms_(std::move(query_norms)) {
  if (layers_ == 0 || heads_ == 0 || queries_ == 0 || frames_ == 0)
    fail(ErrorKind::DimensionMismatch, "attention dimensions must be positive");
  const std::size_t expected = layers_ * heads_ * queries_ * frames_;
  if (attention_.size() != expected)
    fail(ErrorKind::DimensionMismatch, "attention payload has " +
                                           std::to_string(attention_.size()) +
                                           " entries, expected " + std::to_string(expected));
  if (query_norms_.size() != queries_)
    fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(queries_) + " query norms, got " +
                                           std::to_string(query_norms_.size()));
  for (double a : attention_)
    if (!std::isfinite(a) || a < 0.0)
      fail(ErrorKind::InvalidInput, "attention entries must be finite and non-negative");
  for (double v : query_norms_)
    if (!std::isfinite(v) || v < 0.0)
      fail(ErrorKind::InvalidInput, "query norms must be finite and non-negative");
  if (std::none_of(query_norms_.begin(), query_norms_.end(), [](double v) { return v > 0.0; }))
    fail(ErrorKind::AllZeroNorms, "every query norm is zero");
}

Matrix mean_attention(const AttentionBundle& b) {
  Matrix m{b.queries(), b.frames(), std::vector<double>(b.queries() * b.frames(), 0.0)};
  const auto slice = b.queries() * b.frames();
  const auto data = b.attention();
  // the (layer, head) slices are contiguous Q x N blocks
  for (std::size_t s = 0; s < b.layers() * b.heads(); ++s) {
    const double* block = data.data() + s * slice;
    for (std::size_t i = 0; i < slice; ++i) m.values[i] += block[i];
  }
  const double denom = static_cast<double>(b.layers() * b.heads());
  for (auto& v : m.values) v /= denom;
  return m;
}

std::vector<double> query_importance(std::span<const double> norms) {
  const double total = std::accumulate(norms.begin(), norms.end(), 0.0);
  if (!(total > 0.0)) fail(ErrorKind::AllZeroNorms, "query norms sum to zero");
  std::vector<double> alpha(norms.size());
  std::transform(norms.begin(), norms.end(), alpha.begin(), [&](double v) { return v / total; });
  return alpha;
}

std::vector<double> query_importance(const AttentionBundle& bundle) {
  return query_importance(bundle.query_norms());
}

std::vector<std::size_t> top_indices(std::span<const double> values, std::size_t k) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  k = std::min(k, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (values[a] != values[b]) return values[a] > values[b];
                      return a < b;
                    });
  idx.resize(k);
  return idx;
}

FrameRelevance aggregate(const AttentionBundle& bundle, std::size_t top_k) {
  const Matrix mean = mean_attention(bundle);
  const auto alpha = query_importance(bundle);
  FrameRelevance rel;
  rel.weights.assign(bundle.frames(), 0.0);
  for (std::size_t q = 0; q < mean.rows; ++q) {
    const auto row = mean.row(q);
    for (std::size_t n = 0; n < mean.cols; ++n) rel.weights[n] += alpha[q] * row[n];
  }
  rel.top = top_indices(rel.weights, top_k);
  return rel;
}

std::vector<double> top_frames_to_seconds(const FrameRelevance& rel, double fps) {
  if (!(fps > 0.0)) fail(ErrorKind::InvalidInput, "fps must be positive");
  std::vector<double> out;
  out.reserve(rel.top.size());
  for (auto f : rel.top) out.push_back(static_cast<double>(f) / fps);
  return out;
}

AttentionBundle attention_from_json(const nlohmann::json& doc) {
  try {
    return AttentionBundle(doc.at("layers").get<std::size_t>(), doc.at("heads").get<std::size_t>(),
                           doc.at("queries").get<std::size_t>(), doc.at("frames").get<std::size_t>(),
                           doc.at("attention").get<std::vector<double>>(),
                           doc.at("query_norms").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("attention file: ") + e.what());
  }
}

nlohmann::json to_json(const FrameRelevance& rel, double fps) {
  return {{"weights", rel.weights},
          {"top_frames", rel.top},
          {"top_seconds", top_frames_to_seconds(rel, fps)},
          {"fps", fps}};
}

}  // namespace pitchside::grounding
