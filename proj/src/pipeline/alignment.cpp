#include "pitchside/pipeline/alignment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>

#include "pitchside/common/assets.hpp"
#include "pitchside/common/client.hpp"
#include "pitchside/common/digest.hpp"
#include "pitchside/common/error.hpp"
#include "pitchside/common/json_block.hpp"
#include "pitchside/common/text.hpp"
#include "pitchside/event/io.hpp"

namespace pitchside::pipeline {

using event::Side;
using nlohmann::json;

std::string_view to_string(QueryVariant v) noexcept {
  switch (v) {
    case QueryVariant::team_query: return "team_query";
    case QueryVariant::player_query: return "player_query";
    case QueryVariant::player_query_given_team: return "player_query_given_team";
  }
  return "?";
}

std::string_view to_string(AnswerFormat f) noexcept {
  return f == AnswerFormat::json ? "json" : "tagged";
}

AnswerFormat parse_answer_format(std::string_view s) {
  if (s == "json") return AnswerFormat::json;
  if (s == "tagged") return AnswerFormat::tagged;
  fail(ErrorKind::ParseError, "unknown answer format '" + std::string(s) + "'");
}

std::string player_hash(std::string_view team, const event::PlayerRef& player) {
  std::string key(team);
  key += '|';
  key += player.name;
  key += '|';
  key += std::to_string(player.number);
  return sha256_hex(key).substr(0, 8);
}

std::vector<AlignmentOption> player_options(const event::MatchMeta& meta,
                                            const event::GameState& state) {
  std::vector<AlignmentOption> out;
  for (Side side : {Side::home, Side::away})
    for (const auto& p : state.lineup(side).players)
      out.push_back({player_hash(meta.team_name(side), p), side, p});
  return out;
}

std::vector<AlignmentOption> team_options(const event::MatchMeta& meta) {
  return {{meta.home, Side::home, std::nullopt}, {meta.away, Side::away, std::nullopt}};
}

namespace {

constexpr std::string_view kPlayerExample =
    R"({"grounding": [<start seconds>, <end seconds>], "answer": "<player hash>", "top3": ["<player hash>", "<player hash>", "<player hash>"]})";
constexpr std::string_view kTeamExample =
    R"({"grounding": [<start seconds>, <end seconds>], "answer": "<team name>"})";

std::string format_seconds(double s) {
  if (std::abs(s - std::round(s)) < 1e-9) return std::to_string(static_cast<long long>(std::round(s)));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", s);
  std::string out(buf);
  while (out.back() == '0') out.pop_back();
  return out;
}

std::string lineup_text(const event::MatchMeta& meta, const event::GameState& state, Side side) {
  std::string out;
  for (const auto& p : state.lineup(side).players) {
    if (!out.empty()) out += "; ";
    out += "[" + player_hash(meta.team_name(side), p) + "] " + p.name + " (#" +
           std::to_string(p.number) + ", " + std::string(event::to_string(p.position)) + ")";
  }
  return out;
}

std::string history_text(const event::MatchMeta& meta, const event::GameState& state) {
  std::string out;
  for (const auto& e : state.history_events) {
    if (!out.empty()) out += " ";
    out += format_game_time(e.clock) + " (" + meta.team_name(e.team) + "): " + e.detail.value_or("");
  }
  return out.empty() ? "none" : out;
}

std::string options_line(const std::vector<AlignmentOption>& options) {
  std::string out;
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (i) out += "  ";
    out += static_cast<char>('A' + i);
    out += ". " + options[i].key;
  }
  return out;
}

void require_text(const std::string& value, const char* name) {
  if (value.empty()) fail(ErrorKind::UnresolvedPlaceholder, std::string("{") + name + "} is empty");
}

}  // namespace

AlignmentPrompt assemble_context(const event::MatchMeta& meta, const event::GameState& state,
                                 const scene::SceneReport& scene,
                                 const grounding::FrameRelevance& relevance, const Commentary& c_a,
                                 QueryVariant variant, const AssembleOptions& options) {
  AlignmentPrompt prompt;
  prompt.variant = variant;
  const bool team = variant == QueryVariant::team_query;
  prompt.options = team ? team_options(meta) : player_options(meta, state);

  std::map<std::string, std::string> v;
  v["Commentary"] = c_a.body();
  v["Label"] = c_a.event_label();
  v["Team_h"] = meta.home;
  v["Team_a"] = meta.away;
  v["Color_h"] = scene.resolved_colors ? scene.resolved_colors->home : meta.home_color;
  v["Color_a"] = scene.resolved_colors ? scene.resolved_colors->away : meta.away_color;
  for (const char* k : {"Commentary", "Label", "Team_h", "Team_a", "Color_h", "Color_a"})
    require_text(v[k], k);
  if (relevance.top.empty())
    fail(ErrorKind::UnresolvedPlaceholder, "{W_top5} has no frames");
  std::string top;
  for (double s : grounding::top_frames_to_seconds(relevance, options.relevance_fps)) {
    if (!top.empty()) top += ", ";
    top += format_seconds(s);
  }
  v["W_top5"] = top;

  std::map<std::string, std::string> fmt;
  fmt["Example"] = std::string(team ? kTeamExample : kPlayerExample);
  fmt["Options"] = options_line(prompt.options);
  v["Answer_Format"] = render_template(
      prompt_asset(options.format == AnswerFormat::json ? "answer_format_json" : "answer_format_tagged"),
      fmt);

  if (team) {
    prompt.text = render_template(prompt_asset("align_team"), v);
    return prompt;
  }
  std::map<std::string, std::string> q;
  if (options.given_team) q["Team_g"] = meta.team_name(*options.given_team);
  v["Question"] = render_template(prompt_asset(variant == QueryVariant::player_query_given_team
                                                   ? "question_player_given_team"
                                                   : "question_player"),
                                  q);
  v["Lineup_h"] = lineup_text(meta, state, Side::home);
  v["Lineup_a"] = lineup_text(meta, state, Side::away);
  v["History"] = history_text(meta, state);
  auto scene_text = scene::render_scene(scene);
  while (!scene_text.empty() && scene_text.back() == '\n') scene_text.pop_back();
  v["Scene"] = scene_text.empty() ? "none" : scene_text;
  prompt.text = render_template(prompt_asset("align_player"), v);
  return prompt;
}

namespace {

std::string strip_brackets(std::string_view s) {
  s = trim(s);
  while (s.size() >= 2 && ((s.front() == '[' && s.back() == ']') || (s.front() == '"' && s.back() == '"')))
    s = trim(s.substr(1, s.size() - 2));
  return std::string(s);
}

RankedAnswer resolve(std::string_view raw_in, std::span<const std::string> options) {
  RankedAnswer out{strip_brackets(raw_in), std::nullopt};
  const std::string& raw = out.raw;
  const auto letter_at = [&](char c) {
    const auto idx = static_cast<std::size_t>(std::toupper(static_cast<unsigned char>(c)) - 'A');
    if (idx >= options.size())
      fail(ErrorKind::UnknownOption, "answer letter '" + std::string(1, c) + "' is beyond the " +
                                         std::to_string(options.size()) + " options");
    return idx;
  };
  const bool alpha0 = !raw.empty() && std::isalpha(static_cast<unsigned char>(raw[0]));
  if (alpha0 && raw.size() == 1 && std::isupper(static_cast<unsigned char>(raw[0]))) {
    out.choice = letter_at(raw[0]);
    return out;
  }
  if (alpha0 && raw.size() >= 2 && (raw[1] == '.' || raw[1] == ')' || raw[1] == ':') &&
      (raw.size() == 2 || raw[2] == ' ')) {
    out.choice = letter_at(raw[0]);
    return out;
  }
  const auto folded = fold_name(raw);
  for (std::size_t i = 0; i < options.size(); ++i)
    if (fold_name(options[i]) == folded) {
      out.choice = i;
      return out;
    }
  if (options.size() == 2) {
    const auto low = ascii_lower(raw);
    if (low == "home" || low == "hometeam" || low == "home team") out.choice = 0;
    if (low == "away" || low == "awayteam" || low == "away team") out.choice = 1;
  }
  return out;
}

std::optional<GroundingSpan> read_grounding(const json& g) {
  if (g.is_number()) return GroundingSpan{g.get<double>(), g.get<double>()};
  if (g.is_array() && g.size() == 2 && g[0].is_number() && g[1].is_number()) {
    const double a = g[0].get<double>(), b = g[1].get<double>();
    if (a <= b) return GroundingSpan{a, b};
  }
  return std::nullopt;
}

struct Found {
  std::size_t pos = 0;
  AlignmentAnswer answer;
};

std::optional<Found> first_json_block(std::string_view s, std::span<const std::string> options) {
  const auto block = find_json_block(s, [](const json& j) {
    if (!j.is_object()) return false;
    const auto a = j.find("answer");
    return a != j.end() && a->is_string();
  });
  if (!block) return std::nullopt;
  const auto& j = block->value;
  Found f;
  f.pos = block->pos;
  f.answer.top1 = resolve(j.at("answer").get<std::string>(), options);
  if (auto g = j.find("grounding"); g != j.end()) f.answer.grounding = read_grounding(*g);
  if (auto t = j.find("top3"); t != j.end() && t->is_array())
    for (const auto& item : *t)
      if (item.is_string()) f.answer.top3.push_back(resolve(item.get<std::string>(), options));
  return f;
}

std::optional<Found> first_tagged_block(std::string_view s, std::span<const std::string> options) {
  constexpr std::string_view open = "<answer>", close = "</answer>";
  for (std::size_t i = s.find(open); i != std::string_view::npos; i = s.find(open, i + 1)) {
    const auto body = i + open.size();
    const auto end = s.find(close, body);
    if (end == std::string_view::npos) return std::nullopt;
    const auto inner = trim(s.substr(body, end - body));
    if (inner.empty()) continue;
    Found f;
    f.pos = i;
    f.answer.top1 = resolve(inner, options);
    return f;
  }
  return std::nullopt;
}

}  // namespace

AlignmentAnswer parse_alignment(std::string_view response, std::span<const std::string> options) {
  if (options.size() != 2 && options.size() != 22)
    fail(ErrorKind::InvalidInput,
         "alignment takes 2 or 22 options, got " + std::to_string(options.size()));
  auto js = first_json_block(response, options);
  auto tag = first_tagged_block(response, options);
  if (js && tag) return js->pos < tag->pos ? js->answer : tag->answer;
  if (js) return js->answer;
  if (tag) return tag->answer;
  fail(ErrorKind::MalformedResponse, "response holds neither a JSON answer block nor <answer> tags");
}

namespace {

struct Resolved {
  Side side = Side::home;
  std::optional<event::PlayerRef> player;
};

std::optional<Resolved> resolve_prediction(const RankedAnswer& a,
                                           const std::vector<AlignmentOption>& options,
                                           const event::GameState& state, bool team_query) {
  if (a.choice) return Resolved{options[*a.choice].side, options[*a.choice].player};
  if (team_query) return std::nullopt;
  const auto folded = fold_name(a.raw);
  for (Side side : {Side::home, Side::away})
    for (const auto& p : state.lineup(side).players)
      if (fold_name(p.name) == folded) return Resolved{side, p};
  return std::nullopt;
}

StageOneResult stage1_impl(const StageOneInputs& in, Client& client) {
  if (in.log == nullptr) fail(ErrorKind::InvalidInput, "no match log");
  const auto& c_a = in.c_a;
  if (c_a.stage() != Stage::anonymized)
    fail(ErrorKind::InvalidInput, "Stage I takes anonymized commentary");
  const auto& body = c_a.body();
  if (body.find(kCoachPlaceholder) != std::string::npos ||
      body.find(kRefereePlaceholder) != std::string::npos)
    fail(ErrorKind::UnresolvedPlaceholder, "only [PLAYER] and [TEAM] can be aligned");

  QueryVariant variant = QueryVariant::team_query;
  if (body.find(kPlayerPlaceholder) != std::string::npos)
    variant = in.assemble.given_team ? QueryVariant::player_query_given_team
                                     : QueryVariant::player_query;

  const auto& meta = in.log->meta;
  const auto state = event::replay(*in.log, c_a.clock(), {in.history_k, false});
  const auto prompt = assemble_context(meta, state, in.scene, in.relevance, c_a, variant, in.assemble);

  std::vector<std::string> keys;
  for (const auto& o : prompt.options) keys.push_back(o.key);
  const json request = {{"task", "entity_alignment"},
                        {"variant", to_string(variant)},
                        {"format", to_string(in.assemble.format)},
                        {"prompt", prompt.text},
                        {"video", in.video},
                        {"options", keys}};
  StageOneResult out{Commentary(Stage::anonymized, body, c_a.clock(), c_a.event_label()),
                     variant, Side::home, std::nullopt, {}, std::nullopt,
                     request_digest(request)};
  const auto answer = parse_alignment(client.complete(request), keys);
  const bool team = variant == QueryVariant::team_query;

  const auto top1 = resolve_prediction(answer.top1, prompt.options, state, team);
  if (!top1) {
    if (team) fail(ErrorKind::UnknownOption, "answer '" + answer.top1.raw + "' names neither team");
    fail(ErrorKind::PredictionNotInLineup,
         "predicted player '" + answer.top1.raw + "' is not on the pitch at " +
             format_game_time(c_a.clock()));
  }
  out.team = top1->side;
  out.player = top1->player;
  out.grounding = answer.grounding;

  const auto display = [&](const Resolved& r) {
    return r.player ? r.player->name : meta.team_name(r.side);
  };
  if (!answer.top3.empty()) {
    out.top3.push_back(display(*top1));
    for (const auto& ranked : answer.top3) {
      if (out.top3.size() == 3) break;
      const auto r = resolve_prediction(ranked, prompt.options, state, team);
      if (!r) continue;
      const auto name = display(*r);
      if (std::find(out.top3.begin(), out.top3.end(), name) == out.top3.end()) out.top3.push_back(name);
    }
  }

  std::string aligned = body;
  if (out.player) aligned = replace_all(aligned, kPlayerPlaceholder, out.player->name);
  aligned = replace_all(aligned, kTeamPlaceholder, meta.team_name(out.team));
  out.c_ea = Commentary(Stage::entity_aligned, std::move(aligned), c_a.clock(), c_a.event_label());
  return out;
}

}  // namespace

StageOneResult run_stage1(const StageOneInputs& in, Client& client) {
  try {
    return stage1_impl(in, client);
  } catch (const Error& e) {
    fail(e.kind(), "segment " + in.segment_id + ": " + e.what(), e.index());
  }
}

json to_json(const StageOneResult& r) {
  json j = {{"c_ea", to_json(r.c_ea)},
            {"variant", to_string(r.variant)},
            {"team", event::to_string(r.team)},
            {"player", r.player ? event::to_json(*r.player) : json(nullptr)},
            {"top3", r.top3},
            {"request_digest", r.request_digest}};
  j["grounding"] = r.grounding ? json::array({r.grounding->start_s, r.grounding->end_s}) : json(nullptr);
  return j;
}

}  // namespace pitchside::pipeline
