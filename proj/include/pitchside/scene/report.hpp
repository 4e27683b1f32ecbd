#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pitchside/scene/colors.hpp"
#include "pitchside/scene/faces.hpp"
#include "pitchside/scene/shots.hpp"

namespace pitchside {
class Client;
}

namespace pitchside::scene {

enum class View { long_view, medium, close_up, out_of_field };

/// Medium and close-up shots; the only ones mined for faces and jerseys.
constexpr bool is_close(View v) noexcept { return v == View::medium || v == View::close_up; }

std::string to_string(View v);
/// Accepts "long", "long view", "medium", "close-up", "close_up", "close-up view",
/// "out_of_field", "out-of-field view", "audience" and similar spellings.
View parse_view(std::string_view label);

/// One jersey sighting. At least one of name and number is present.
class JerseyRecord {
 public:
  JerseyRecord(std::optional<std::string> name, std::optional<int> number, std::string color,
               std::string action);

  const std::optional<std::string>& name() const noexcept { return name_; }
  const std::optional<int>& number() const noexcept { return number_; }
  const std::string& color() const noexcept { return color_; }
  const std::string& action() const noexcept { return action_; }

  bool operator==(const JerseyRecord&) const = default;

 private:
  std::optional<std::string> name_;
  std::optional<int> number_;
  std::string color_;
  std::string action_;
};

/// "(Name, Number, Color): Action"; an absent field prints as "?".
std::string format_jersey(const JerseyRecord& r);

/// Reads recognizer output, one record per line in the format above. Lines
/// that do not open with '(' are ignored; a parenthesized line that does not
/// fit the format raises ParseError. Colours are normalized.
std::vector<JerseyRecord> parse_jersey_lines(std::string_view text);

struct Shot {
  ShotSpan span;
  View view = View::long_view;
  bool operator==(const Shot&) const = default;
};

struct SceneReport {
  std::vector<Shot> shots;
  std::vector<std::vector<event::PlayerRef>> recognized;  // per shot
  std::vector<std::vector<JerseyRecord>> jerseys;        // per shot
  std::optional<TeamColors> resolved_colors;

  std::size_t close_shot_count() const;
  bool operator==(const SceneReport&) const = default;
};

using JerseysByShot = std::map<std::size_t, std::vector<JerseyRecord>>;

/// Pairs each shot with its view and attaches faces and jerseys to close
/// shots only. Throws LengthMismatch when views and shots differ in count and
/// InvalidInput when faces or jerseys reference a shot that does not exist.
SceneReport build_scene_report(std::span<const ShotSpan> shots, std::span<const View> views,
                               const RecognizedFaces& faces, const JerseysByShot& jerseys,
                               std::optional<TeamColors> colors = std::nullopt);

/// Text block used inside prompts, one line per shot with times at `fps`.
std::string render_scene(const SceneReport& report, double fps = kShotDetectionFps);

nlohmann::json to_json(const SceneReport& report);
SceneReport scene_report_from_json(const nlohmann::json& j);

/// Instruction sent with every view-classification request.
std::string_view view_classification_prompt();

/// Asks `client` for one view label per shot. `image_refs[i]` names the
/// keyframe image of shot i. Requests are independent and keyed by digest.
std::vector<View> classify_views(Client& client, std::span<const std::string> image_refs);

}  // namespace pitchside::scene
