#include "pitchside/scene/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "pitchside/common/client.hpp"
#include "pitchside/common/assets.hpp"
#include "pitchside/common/error.hpp"
#include "pitchside/common/text.hpp"
#include "pitchside/event/io.hpp"

namespace pitchside::scene {

using nlohmann::json;

std::string to_string(View v) {
  switch (v) {
    case View::long_view: return "long";
    case View::medium: return "medium";
    case View::close_up: return "close_up";
    case View::out_of_field: return "out_of_field";
  }
  return "long";
}

View parse_view(std::string_view label) {
  std::string s = ascii_lower(trim(label));
  std::replace(s.begin(), s.end(), '-', ' ');
  std::replace(s.begin(), s.end(), '_', ' ');
  while (!s.empty() && (s.back() == '.' || s.back() == ' ')) s.pop_back();
  if (s.size() > 5 && s.ends_with(" view")) s.resize(s.size() - 5);
  if (s.size() > 5 && s.ends_with(" shot")) s.resize(s.size() - 5);
  if (s == "long") return View::long_view;
  if (s == "medium") return View::medium;
  if (s == "close up" || s == "closeup" || s == "close") return View::close_up;
  if (s == "out of field" || s == "audience") return View::out_of_field;
  fail(ErrorKind::ParseError, "unknown view label '" + std::string(label) + "'");
}

JerseyRecord::JerseyRecord(std::optional<std::string> name, std::optional<int> number,
                           std::string color, std::string action)
    : name_(std::move(name)), number_(number), color_(std::move(color)), action_(std::move(action)) {
  if (name_ && trim(*name_).empty()) name_.reset();
  if (!name_ && !number_)
    fail(ErrorKind::InvalidInput, "a jersey record needs a name or a number");
  if (number_ && (*number_ < 0 || *number_ > 99))
    fail(ErrorKind::InvalidInput, "jersey number out of range");
}

std::string format_jersey(const JerseyRecord& r) {
  std::string out = "(";
  out += r.name() ? *r.name() : "?";
  out += ", ";
  out += r.number() ? std::to_string(*r.number()) : "?";
  out += ", ";
  out += r.color().empty() ? "?" : r.color();
  out += "): ";
  out += r.action();
  return out;
}

namespace {

bool is_unknown(std::string_view field) {
  const auto t = ascii_lower(trim(field));
  return t.empty() || t == "?" || t == "unknown" || t == "n/a" || t == "none" || t == "-";
}

}  // namespace

std::vector<JerseyRecord> parse_jersey_lines(std::string_view text) {
  std::vector<JerseyRecord> out;
  std::size_t line_no = 0;
  for (const auto& raw : split_if(text, [](char c) { return c == '\n'; })) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() != '(') continue;
    const auto where = "jersey line " + std::to_string(line_no);
    const auto close = line.find(')');
    if (close == std::string_view::npos) fail(ErrorKind::ParseError, where + " has no ')'");
    const auto inner = line.substr(1, close - 1);
    auto rest = trim(line.substr(close + 1));
    if (rest.empty() || rest.front() != ':') fail(ErrorKind::ParseError, where + " has no ':'");
    rest = trim(rest.substr(1));

    // name may itself contain commas; number and colour are the last two fields
    const auto c2 = inner.rfind(',');
    const auto c1 = c2 == std::string_view::npos ? c2 : inner.rfind(',', c2 == 0 ? 0 : c2 - 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos || c1 == c2)
      fail(ErrorKind::ParseError, where + " must hold (name, number, colour)");
    const auto name_f = trim(inner.substr(0, c1));
    const auto num_f = trim(inner.substr(c1 + 1, c2 - c1 - 1));
    const auto color_f = trim(inner.substr(c2 + 1));

    std::optional<std::string> name;
    if (!is_unknown(name_f)) name = std::string(name_f);
    std::optional<int> number;
    if (!is_unknown(num_f)) {
      auto digits = num_f;
      if (!digits.empty() && digits.front() == '#') digits.remove_prefix(1);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (ec != std::errc() || ptr != digits.data() + digits.size())
        fail(ErrorKind::ParseError, where + " has a non-numeric jersey number");
      number = v;
    }
    const std::string color = is_unknown(color_f) ? std::string() : normalize_color(color_f);
    try {
      out.emplace_back(std::move(name), number, color, std::string(rest));
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, where + ": " + e.what());
    }
  }
  return out;
}

std::size_t SceneReport::close_shot_count() const {
  return static_cast<std::size_t>(
      std::count_if(shots.begin(), shots.end(), [](const Shot& s) { return is_close(s.view); }));
}

SceneReport build_scene_report(std::span<const ShotSpan> shots, std::span<const View> views,
                               const RecognizedFaces& faces, const JerseysByShot& jerseys,
                               std::optional<TeamColors> colors) {
  if (shots.size() != views.size())
    fail(ErrorKind::LengthMismatch, "got " + std::to_string(views.size()) + " view labels for " +
                                        std::to_string(shots.size()) + " shots");
  for (std::size_t i = 0; i < shots.size(); ++i) {
    if (shots[i].end <= shots[i].start)
      fail(ErrorKind::InvalidInput, "shot " + std::to_string(i) + " is empty");
    if (i > 0 && shots[i].start != shots[i - 1].end)
      fail(ErrorKind::InvalidInput, "shots must be contiguous");
  }
  if (!faces.empty() && faces.rbegin()->first >= shots.size())
    fail(ErrorKind::InvalidInput, "faces reference shot " + std::to_string(faces.rbegin()->first));
  if (!jerseys.empty() && jerseys.rbegin()->first >= shots.size())
    fail(ErrorKind::InvalidInput,
         "jerseys reference shot " + std::to_string(jerseys.rbegin()->first));

  SceneReport report;
  report.resolved_colors = std::move(colors);
  report.shots.reserve(shots.size());
  report.recognized.resize(shots.size());
  report.jerseys.resize(shots.size());
  for (std::size_t i = 0; i < shots.size(); ++i) {
    report.shots.push_back({shots[i], views[i]});
    if (!is_close(views[i])) continue;
    if (auto f = faces.find(i); f != faces.end()) report.recognized[i] = f->second;
    if (auto j = jerseys.find(i); j != jerseys.end()) report.jerseys[i] = j->second;
  }
  return report;
}

namespace {

std::string seconds(std::size_t frame, double fps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", static_cast<double>(frame) / fps);
  return buf;
}

std::string view_phrase(View v) {
  switch (v) {
    case View::long_view: return "long view";
    case View::medium: return "medium view";
    case View::close_up: return "close-up view";
    case View::out_of_field: return "out-of-field view";
  }
  return "long view";
}

}  // namespace

std::string render_scene(const SceneReport& report, double fps) {
  if (!(fps > 0.0)) fail(ErrorKind::InvalidInput, "fps must be positive");
  std::ostringstream out;
  for (std::size_t i = 0; i < report.shots.size(); ++i) {
    const auto& shot = report.shots[i];
    out << "Shot " << (i + 1) << " (" << seconds(shot.span.start, fps) << "s-"
        << seconds(shot.span.end, fps) << "s): " << view_phrase(shot.view);
    if (!report.recognized[i].empty()) {
      out << "; faces: ";
      for (std::size_t k = 0; k < report.recognized[i].size(); ++k) {
        const auto& p = report.recognized[i][k];
        if (k) out << ", ";
        out << p.name << " #" << p.number;
      }
    }
    if (!report.jerseys[i].empty()) {
      out << "; jerseys: ";
      for (std::size_t k = 0; k < report.jerseys[i].size(); ++k) {
        if (k) out << "; ";
        out << format_jersey(report.jerseys[i][k]);
      }
    }
    out << "\n";
  }
  return out.str();
}

json to_json(const SceneReport& report) {
  json shots = json::array();
  for (std::size_t i = 0; i < report.shots.size(); ++i) {
    const auto& s = report.shots[i];
    json faces = json::array();
    for (const auto& p : report.recognized[i]) faces.push_back(event::to_json(p));
    json jerseys = json::array();
    for (const auto& r : report.jerseys[i]) {
      jerseys.push_back({{"name", r.name() ? json(*r.name()) : json(nullptr)},
                         {"number", r.number() ? json(*r.number()) : json(nullptr)},
                         {"color", r.color()},
                         {"action", r.action()}});
    }
    shots.push_back({{"start_frame", s.span.start},
                     {"end_frame", s.span.end},
                     {"view", to_string(s.view)},
                     {"recognized", std::move(faces)},
                     {"jerseys", std::move(jerseys)}});
  }
  json colors = nullptr;
  if (report.resolved_colors)
    colors = {{"home", report.resolved_colors->home}, {"away", report.resolved_colors->away}};
  return {{"shots", std::move(shots)}, {"resolved_colors", std::move(colors)}};
}

SceneReport scene_report_from_json(const json& j) {
  try {
    SceneReport report;
    for (const auto& s : j.at("shots")) {
      report.shots.push_back(
          {{s.at("start_frame").get<std::size_t>(), s.at("end_frame").get<std::size_t>()},
           parse_view(s.at("view").get<std::string>())});
      std::vector<event::PlayerRef> faces;
      if (auto it = s.find("recognized"); it != s.end())
        for (const auto& p : *it) faces.push_back(event::player_from_json(p));
      report.recognized.push_back(std::move(faces));
      std::vector<JerseyRecord> jerseys;
      if (auto it = s.find("jerseys"); it != s.end()) {
        for (const auto& r : *it) {
          std::optional<std::string> name;
          std::optional<int> number;
          if (r.contains("name") && !r["name"].is_null()) name = r["name"].get<std::string>();
          if (r.contains("number") && !r["number"].is_null()) number = r["number"].get<int>();
          jerseys.emplace_back(std::move(name), number, r.value("color", std::string()),
                               r.value("action", std::string()));
        }
      }
      report.jerseys.push_back(std::move(jerseys));
    }
    if (auto it = j.find("resolved_colors"); it != j.end() && !it->is_null())
      report.resolved_colors =
          TeamColors{it->at("home").get<std::string>(), it->at("away").get<std::string>()};
    return report;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("scene report: ") + e.what());
  }
}

std::string_view view_classification_prompt() { return prompt_asset("view_classification"); }

std::vector<View> classify_views(Client& client, std::span<const std::string> image_refs) {
  std::vector<View> out;
  out.reserve(image_refs.size());
  for (std::size_t i = 0; i < image_refs.size(); ++i) {
    const json request = {{"task", "view_classification"},
                          {"prompt", view_classification_prompt()},
                          {"image", image_refs[i]}};
    try {
      out.push_back(parse_view(client.complete(request)));
    } catch (const Error& e) {
      fail(e.kind(), "shot " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  return out;
}

}  // namespace pitchside::scene
