#include "pitchside/pipeline/knowledge.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pitchside/common/assets.hpp"
#include "pitchside/common/client.hpp"
#include "pitchside/common/json_block.hpp"
#include "pitchside/common/text.hpp"
#include "pitchside/event/game_state.hpp"
#include "pitchside/stats/query.hpp"

namespace pitchside::pipeline {

using event::EventKind;
using nlohmann::json;

namespace {

constexpr std::string_view kQuestionExample =
    R"({"questions": ["<question 1>", "<question 2>", "<question 3>", "<question 4>"]})";

std::map<std::string, std::string> match_values(const Commentary& c, const event::MatchMeta& meta) {
  return {{"Commentary", c.body()},  {"Team_h", meta.home},     {"Team_a", meta.away},
          {"League", meta.league},   {"Season", meta.season},  {"Date", meta.kickoff},
          {"Teams", meta.home + " and " + meta.away}};
}

bool string_list(const json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_string(); });
}

// Text of the first non-empty line that is not a code fence.
std::string extract_dsl(std::string_view reply) {
  for (const auto& line : split_if(reply, [](char c) { return c == '\n'; })) {
    auto t = trim(line);
    if (t.starts_with("```")) continue;
    while (!t.empty() && t.front() == '`') t.remove_prefix(1);
    while (!t.empty() && t.back() == '`') t.remove_suffix(1);
    t = trim(t);
    if (!t.empty()) return std::string(t);
  }
  return {};
}

}  // namespace

std::vector<std::string> generate_questions(const Commentary& c_ea, const event::MatchMeta& meta,
                                            Client& client) {
  auto values = match_values(c_ea, meta);
  values["Example"] = std::string(kQuestionExample);
  const json request = {{"task", "question_generation"},
                        {"prompt", render_template(prompt_asset("question_generation"), values)}};
  const auto reply = client.complete(request);
  const auto block = find_json_block(reply, [](const json& j) {
    if (j.is_object()) {
      const auto it = j.find("questions");
      return it != j.end() && string_list(*it);
    }
    return string_list(j);
  });
  if (!block) fail(ErrorKind::MalformedResponse, "question reply holds no list of strings");
  const json& list = block->value.is_object() ? block->value.at("questions") : block->value;
  if (list.size() != kQuestionCount)
    fail(ErrorKind::WrongQuestionCount, "expected " + std::to_string(kQuestionCount) +
                                            " questions, got " + std::to_string(list.size()));
  return list.get<std::vector<std::string>>();
}

ExternalKnowledge gather_external(const Commentary& c_ea, const event::MatchMeta& meta,
                                  const stats::StatStore& store, Client& client) {
  ExternalKnowledge out;
  std::vector<stats::AnsweredQuery> answered;
  for (const auto& question : generate_questions(c_ea, meta, client)) {
    QuestionOutcome q;
    q.question = question;
    const json request = {
        {"task", "dsl_translation"},
        {"prompt", render_template(prompt_asset("dsl_translation"),
                                   {{"Date", meta.kickoff}, {"Question", question}})}};
    q.dsl = extract_dsl(client.complete(request));
    try {
      q.query = stats::parse_query(q.dsl);
      q.answer = stats::execute(store, *q.query);
      answered.push_back({*q.query, *q.answer});
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ClientError) throw;
      q.error_kind = e.kind();
      q.error = e.what();
    }
    out.outcomes.push_back(std::move(q));
  }
  out.validation = stats::validate_answers(answered, meta.kickoff_time());
  return out;
}

namespace {

std::set<EventKind> kinds_for_label(std::string_view label) {
  std::string low = ascii_lower(label);
  std::replace(low.begin(), low.end(), '-', ' ');
  std::replace(low.begin(), low.end(), '_', ' ');
  const auto has = [&](std::string_view w) { return low.find(w) != std::string::npos; };
  if (has("goal"))
    return {EventKind::goal, EventKind::own_goal, EventKind::penalty_goal, EventKind::header_goal};
  if (has("yellow") && has("red")) return {EventKind::yellow_card, EventKind::red_card};
  if (has("yellow")) return {EventKind::yellow_card};
  if (has("red")) return {EventKind::red_card};
  if (has("card")) return {EventKind::yellow_card, EventKind::red_card};
  if (has("corner")) return {EventKind::corner};
  if (has("foul")) return {EventKind::foul};
  if (has("free kick")) return {EventKind::free_kick};
  if (has("penalty")) return {EventKind::penalty_awarded, EventKind::penalty_goal};
  if (has("substitution")) return {EventKind::substitution};
  if (has("offside")) return {EventKind::offside};
  return {};
}

std::string kind_text(EventKind k) {
  switch (k) {
    case EventKind::goal: return "goal";
    case EventKind::own_goal: return "own goal";
    case EventKind::penalty_goal: return "penalty goal";
    case EventKind::header_goal: return "headed goal";
    case EventKind::yellow_card: return "yellow card";
    case EventKind::red_card: return "red card";
    case EventKind::free_kick: return "free kick";
    case EventKind::penalty_awarded: return "penalty awarded";
    default: return std::string(event::to_string(k));
  }
}

std::string method_text(EventKind k) {
  switch (k) {
    case EventKind::own_goal: return "own goal";
    case EventKind::penalty_goal: return "penalty";
    case EventKind::header_goal: return "header";
    default: return "open play";
  }
}

std::string describe(const event::MatchMeta& meta, const event::MatchEvent& e) {
  std::string out = format_game_time(e.clock) + " " + kind_text(e.kind);
  if (e.kind == EventKind::substitution && e.incoming && e.outgoing)
    out += ", " + e.incoming->name + " for " + e.outgoing->name;
  else if (e.actor)
    out += ", " + e.actor->name;
  out += " (" + meta.team_name(e.team) + ")";
  return out;
}

}  // namespace

std::string internal_knowledge(const event::MatchLog& log, const Commentary& c_ea,
                               const std::optional<event::PlayerRef>& player,
                               const stats::StatStore* store) {
  const auto& meta = log.meta;
  const auto state = event::replay(log, c_ea.clock(), {event::kDefaultHistoryK, true});
  std::vector<std::string> lines;
  lines.push_back("Current score: " + meta.home + " " + std::to_string(state.score_home) + "-" +
                  std::to_string(state.score_away) + " " + meta.away + ".");

  const auto kinds = kinds_for_label(c_ea.event_label());
  std::vector<const event::MatchEvent*> timeline;
  for (const auto& e : log.events) {
    if (e.clock > c_ea.clock()) break;
    if (kinds.contains(e.kind)) timeline.push_back(&e);
  }
  if (!kinds.empty()) {
    std::string t = "Timeline of " + c_ea.event_label() + " events so far:";
    if (timeline.empty()) t += " none";
    for (std::size_t i = 0; i < timeline.size(); ++i)
      t += (i ? "; " : " ") + describe(meta, *timeline[i]);
    lines.push_back(t + ".");
  }

  const event::MatchEvent* current =
      !timeline.empty() && timeline.back()->clock == c_ea.clock() ? timeline.back() : nullptr;
  if (current != nullptr && event::is_goal_kind(current->kind)) {
    std::string g = "Current goal: ";
    g += current->actor ? current->actor->name : std::string("unknown scorer");
    g += " (" + meta.team_name(current->team) + ")";
    if (current->kind == EventKind::own_goal)
      g += ", credited to " + meta.team_name(event::opponent(current->team));
    if (current->assist) g += ", assisted by " + current->assist->name;
    g += ", method: " + method_text(current->kind) + ".";
    lines.push_back(g);
  }

  if (player && store != nullptr) {
    try {
      const auto& bio = stats::player_background(*store, player->name);
      lines.push_back("Player background: " + bio.name + ", " + bio.nationality + ", " +
                      std::to_string(bio.height_cm) + " cm, born " + bio.birthdate + ".");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnknownEntity && e.kind() != ErrorKind::DuplicateEntity) throw;
    }
  }

  std::string out;
  for (const auto& l : lines) {
    if (!out.empty()) out += "\n";
    out += l;
  }
  return out;
}

std::string external_block(const std::vector<stats::AnsweredQuery>& kept) {
  std::string out;
  for (const auto& a : kept) {
    if (!out.empty()) out += "\n";
    out += stats::render_answer(a);
  }
  return out;
}

Commentary run_stage2(const Commentary& c_ea, const event::MatchMeta& meta,
                      const std::string& internal, const std::vector<stats::AnsweredQuery>& kept,
                      Client& client) {
  auto values = match_values(c_ea, meta);
  values["Label"] = c_ea.event_label();
  values["GameTime"] = format_game_time(c_ea.clock());
  values["External_Knowledge"] = external_block(kept);
  values["Internal_Knowledge"] = internal;
  const json request = {{"task", "refinement"},
                        {"prompt", render_template(prompt_asset("refinement"), values)}};
  const auto reply = std::string(trim(client.complete(request)));
  if (reply.empty()) fail(ErrorKind::MalformedResponse, "refiner returned no text");
  return Commentary(Stage::knowledge_enhanced, reply, c_ea.clock(), c_ea.event_label());
}

json to_json(const QuestionOutcome& q) {
  json j = {{"question", q.question}, {"dsl", q.dsl}};
  j["query"] = q.query ? json(stats::print_query(*q.query)) : json(nullptr);
  j["answer"] = q.answer ? stats::to_json(*q.answer) : json(nullptr);
  j["error"] = q.error_kind ? json{{"kind", error_kind_name(*q.error_kind)}, {"message", q.error}}
                            : json(nullptr);
  return j;
}

}  // namespace pitchside::pipeline
