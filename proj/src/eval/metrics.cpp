#include "pitchside/eval/metrics.hpp"

#include <algorithm>

#include "pitchside/common/error.hpp"
#include "pitchside/common/text.hpp"

namespace pitchside::eval {

using nlohmann::json;

std::string_view to_string(Variant v) noexcept { return v == Variant::open ? "open" : "given_team"; }

Variant parse_variant(std::string_view s) {
  if (s == "open") return Variant::open;
  if (s == "given_team") return Variant::given_team;
  fail(ErrorKind::ParseError, "unknown variant '" + std::string(s) + "'");
}

namespace {

bool same(std::string_view a, std::string_view b) { return fold_name(a) == fold_name(b); }

void check(const PredictionRecord& r) {
  if (!r.top3.empty() && !same(r.top3.front(), r.predicted_player))
    fail(ErrorKind::InvalidInput, "segment " + r.segment_id + ": top-3 must start with the top-1 prediction");
  if (r.top3.size() > 3)
    fail(ErrorKind::InvalidInput, "segment " + r.segment_id + ": more than three ranked players");
  if (same(r.predicted_player, r.gold_player) && !same(r.predicted_team, r.gold_team))
    fail(ErrorKind::InvalidInput,
         "segment " + r.segment_id + ": the gold player is listed under two teams");
}

AccuracyRow row(const std::vector<const PredictionRecord*>& rs) {
  AccuracyRow out;
  out.records = rs.size();
  std::size_t p1 = 0, p3 = 0, team = 0;
  for (const auto* r : rs) {
    const bool hit1 = same(r->predicted_player, r->gold_player);
    const bool hit3 = hit1 || std::any_of(r->top3.begin(), r->top3.end(),
                                          [&](const std::string& p) { return same(p, r->gold_player); });
    p1 += hit1;
    p3 += hit3;
    team += same(r->predicted_team, r->gold_team);
  }
  const double n = static_cast<double>(rs.size());
  out.player_at_1 = 100.0 * static_cast<double>(p1) / n;
  out.player_at_3 = 100.0 * static_cast<double>(p3) / n;
  out.team = 100.0 * static_cast<double>(team) / n;
  return out;
}

}  // namespace

AccuracyReport alignment_accuracy(std::span<const PredictionRecord> records) {
  if (records.empty()) fail(ErrorKind::EmptyInput, "no prediction records");
  std::vector<const PredictionRecord*> all, open, given;
  for (const auto& r : records) {
    check(r);
    all.push_back(&r);
    (r.variant == Variant::open ? open : given).push_back(&r);
  }
  AccuracyReport out;
  out.overall = row(all);
  if (!open.empty()) out.open = row(open);
  if (!given.empty()) out.given_team = row(given);
  return out;
}

PredictionRecord prediction_from_json(const json& j) {
  try {
    PredictionRecord r;
    r.segment_id = j.at("segment_id").get<std::string>();
    r.gold_player = j.at("gold").at("player").get<std::string>();
    r.gold_team = j.at("gold").at("team").get<std::string>();
    r.predicted_player = j.at("predicted").at("player").get<std::string>();
    r.predicted_team = j.at("predicted").at("team").get<std::string>();
    if (j.contains("top3") && !j["top3"].is_null()) r.top3 = j["top3"].get<std::vector<std::string>>();
    if (j.contains("variant")) r.variant = parse_variant(j["variant"].get<std::string>());
    return r;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("prediction record: ") + e.what());
  }
}

json to_json(const PredictionRecord& r) {
  return {{"segment_id", r.segment_id},
          {"gold", {{"player", r.gold_player}, {"team", r.gold_team}}},
          {"predicted", {{"player", r.predicted_player}, {"team", r.predicted_team}}},
          {"top3", r.top3},
          {"variant", to_string(r.variant)}};
}

namespace {

json row_json(const AccuracyRow& r) {
  return {{"records", r.records},
          {"player_at_1", r.player_at_1},
          {"player_at_3", r.player_at_3},
          {"team", r.team}};
}

}  // namespace

json to_json(const AccuracyReport& r) {
  json j = {{"overall", row_json(r.overall)}};
  j["open"] = r.open ? row_json(*r.open) : json(nullptr);
  j["given_team"] = r.given_team ? row_json(*r.given_team) : json(nullptr);
  return j;
}

}  // namespace pitchside::eval
