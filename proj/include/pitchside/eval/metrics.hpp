#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace pitchside::eval {

/// open: the reasoner picks among all 22 players; given_team: it is told the
/// acting team first.
enum class Variant { open, given_team };

std::string_view to_string(Variant v) noexcept;
Variant parse_variant(std::string_view s);

/// One aligned segment. `predicted_team` is the team of the predicted player.
/// `top3`, when present, starts with `predicted_player`.
struct PredictionRecord {
  std::string segment_id;
  std::string gold_player;
  std::string gold_team;
  std::string predicted_player;
  std::string predicted_team;
  std::vector<std::string> top3;
  Variant variant = Variant::open;
};

/// Percentages in [0, 100].
struct AccuracyRow {
  std::size_t records = 0;
  double player_at_1 = 0.0;
  double player_at_3 = 0.0;
  double team = 0.0;
};

struct AccuracyReport {
  AccuracyRow overall;
  std::optional<AccuracyRow> open;
  std::optional<AccuracyRow> given_team;  // Player_c / Team_c
};

/// Names compare after case folding. Throws EmptyInput for no records and
/// InvalidInput for a record whose top-3 does not start with its top-1, or
/// whose predicted player equals the gold player under a different team.
AccuracyReport alignment_accuracy(std::span<const PredictionRecord> records);

/// {segment_id, gold:{player,team}, predicted:{player,team}, top3?, variant?}
PredictionRecord prediction_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PredictionRecord& r);
nlohmann::json to_json(const AccuracyReport& r);

}  // namespace pitchside::eval
