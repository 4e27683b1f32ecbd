#include "pitchside/pipeline/commentary.hpp"

#include <array>

#include "pitchside/common/error.hpp"

namespace pitchside::pipeline {

using nlohmann::json;

std::string_view to_string(Stage s) noexcept {
  switch (s) {
    case Stage::anonymized: return "anonymized";
    case Stage::entity_aligned: return "entity_aligned";
    case Stage::knowledge_enhanced: return "knowledge_enhanced";
  }
  return "?";
}

Stage parse_stage(std::string_view s) {
  for (auto st : {Stage::anonymized, Stage::entity_aligned, Stage::knowledge_enhanced})
    if (s == to_string(st)) return st;
  fail(ErrorKind::ParseError, "unknown commentary stage '" + std::string(s) + "'");
}

bool has_placeholder(std::string_view body) {
  constexpr std::array all{kPlayerPlaceholder, kTeamPlaceholder, kCoachPlaceholder,
                           kRefereePlaceholder};
  for (auto p : all)
    if (body.find(p) != std::string_view::npos) return true;
  return false;
}

Commentary::Commentary(Stage stage, std::string body, MatchClock clock, std::string event_label)
    : stage_(stage), body_(std::move(body)), clock_(clock), event_label_(std::move(event_label)) {
  if (!clock_.valid()) fail(ErrorKind::InvalidInput, "commentary clock out of range");
  if (stage_ == Stage::anonymized && !has_placeholder(body_))
    fail(ErrorKind::InvalidInput, "anonymized commentary has no entity placeholder");
  if (stage_ == Stage::entity_aligned && has_placeholder(body_))
    fail(ErrorKind::InvalidInput, "entity-aligned commentary still holds a placeholder");
}

json to_json(const Commentary& c) {
  return {{"stage", to_string(c.stage())},
          {"body", c.body()},
          {"clock", format_game_time(c.clock())},
          {"event_label", c.event_label()}};
}

Commentary commentary_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "commentary must be an object");
  auto text = [&](const char* key, const char* alt) -> std::string {
    for (const char* k : {key, alt}) {
      if (k == nullptr) continue;
      if (auto it = j.find(k); it != j.end()) {
        if (!it->is_string()) fail(ErrorKind::ParseError, std::string("commentary.") + k + " must be a string");
        return it->get<std::string>();
      }
    }
    fail(ErrorKind::ParseError, std::string("commentary lacks '") + key + "'");
  };
  const Stage stage = j.contains("stage") ? parse_stage(text("stage", nullptr)) : Stage::anonymized;
  return Commentary(stage, text("body", nullptr), parse_game_time(text("clock", nullptr)),
                    text("event_label", "label"));
}

}  // namespace pitchside::pipeline
