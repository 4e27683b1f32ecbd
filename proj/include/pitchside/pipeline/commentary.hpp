#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "pitchside/common/clock.hpp"

namespace pitchside::pipeline {

enum class Stage { anonymized, entity_aligned, knowledge_enhanced };

std::string_view to_string(Stage s) noexcept;
Stage parse_stage(std::string_view s);

/// Entity placeholders that may appear in anonymized commentary.
inline constexpr std::string_view kPlayerPlaceholder = "[PLAYER]";
inline constexpr std::string_view kTeamPlaceholder = "[TEAM]";
inline constexpr std::string_view kCoachPlaceholder = "[COACH]";
inline constexpr std::string_view kRefereePlaceholder = "[REFEREE]";

bool has_placeholder(std::string_view body);

/// One commentary line at a stage of the pipeline. Anonymized bodies carry at
/// least one placeholder; entity-aligned bodies carry none. Violations throw
/// InvalidInput.
class Commentary {
 public:
  Commentary(Stage stage, std::string body, MatchClock clock, std::string event_label);

  Stage stage() const noexcept { return stage_; }
  const std::string& body() const noexcept { return body_; }
  const MatchClock& clock() const noexcept { return clock_; }
  const std::string& event_label() const noexcept { return event_label_; }

  bool operator==(const Commentary&) const = default;

 private:
  Stage stage_;
  std::string body_;
  MatchClock clock_;
  std::string event_label_;
};

/// {stage, body, clock:"H - MM:SS", event_label}
nlohmann::json to_json(const Commentary& c);
/// `stage` defaults to anonymized when absent.
Commentary commentary_from_json(const nlohmann::json& j);

}  // namespace pitchside::pipeline
