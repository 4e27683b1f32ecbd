#include "pitchside/event/io.hpp"

#include <algorithm>
#include <initializer_list>
#include <string_view>

#include "pitchside/common/error.hpp"
#include "pitchside/common/files.hpp"

namespace pitchside::event {

using nlohmann::json;

namespace {

class Reader {
 public:
  explicit Reader(IngestMode mode) : mode_(mode) {}

  const json& object(const json& j, std::string_view where,
                     std::initializer_list<std::string_view> allowed) const {
    if (!j.is_object()) fail(ErrorKind::ParseError, std::string(where) + " must be an object");
    if (mode_ == IngestMode::strict) {
      for (const auto& [key, _] : j.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
          fail(ErrorKind::ParseError, "unknown field '" + key + "' in " + std::string(where));
    }
    return j;
  }

  static const json& required(const json& obj, const char* key, std::string_view where) {
    auto it = obj.find(key);
    if (it == obj.end())
      fail(ErrorKind::ParseError, std::string(where) + " is missing '" + key + "'");
    return *it;
  }

  static std::string str(const json& obj, const char* key, std::string_view where) {
    const auto& v = required(obj, key, where);
    if (!v.is_string())
      fail(ErrorKind::ParseError, std::string(where) + "." + key + " must be a string");
    return v.get<std::string>();
  }

  static int integer(const json& obj, const char* key, std::string_view where) {
    const auto& v = required(obj, key, where);
    if (!v.is_number_integer())
      fail(ErrorKind::ParseError, std::string(where) + "." + key + " must be an integer");
    return v.get<int>();
  }

 private:
  IngestMode mode_;
};

PlayerRef player_from_json(const Reader& r, const json& j, std::string_view where) {
  r.object(j, where, {"name", "number", "position"});
  PlayerRef p;
  p.name = Reader::str(j, "name", where);
  p.number = Reader::integer(j, "number", where);
  p.position = parse_position(Reader::str(j, "position", where));
  return p;
}

std::vector<PlayerRef> lineup_from_json(const Reader& r, const json& j, std::string_view where) {
  if (!j.is_array()) fail(ErrorKind::ParseError, std::string(where) + " must be an array");
  std::vector<PlayerRef> out;
  for (const auto& p : j) out.push_back(player_from_json(r, p, where));
  return out;
}

struct Rosters {
  std::vector<PlayerRef> home;
  std::vector<PlayerRef> away;
  std::vector<PlayerRef>& of(Side s) { return s == Side::home ? home : away; }
};

std::optional<PlayerRef> player_field(const Reader& r, const json& ev, const char* key, Side side,
                                      Rosters& rosters, std::string_view where) {
  auto it = ev.find(key);
  if (it == ev.end() || it->is_null()) return std::nullopt;
  if (it->is_object()) return player_from_json(r, *it, where);
  if (it->is_string()) {
    const auto name = it->get<std::string>();
    for (const auto& p : rosters.of(side))
      if (p.name == name) return p;
    fail(ErrorKind::ActorNotInLineup, std::string(where) + "." + key + ": '" + name +
                                          "' is not on the " + std::string(to_string(side)) +
                                          " roster");
  }
  fail(ErrorKind::ParseError, std::string(where) + "." + key + " must be a player or a name");
}

}  // namespace

MatchLog match_log_from_json(const json& doc, IngestMode mode) {
  Reader r(mode);
  r.object(doc, "match log", {"meta", "lineups", "events"});

  MatchLog log;
  const auto& meta = r.object(Reader::required(doc, "meta", "match log"), "meta",
                              {"home", "away", "league", "season", "kickoff", "home_color",
                               "away_color"});
  log.meta.home = Reader::str(meta, "home", "meta");
  log.meta.away = Reader::str(meta, "away", "meta");
  log.meta.league = Reader::str(meta, "league", "meta");
  log.meta.season = Reader::str(meta, "season", "meta");
  log.meta.kickoff = Reader::str(meta, "kickoff", "meta");
  log.meta.home_color = Reader::str(meta, "home_color", "meta");
  log.meta.away_color = Reader::str(meta, "away_color", "meta");

  const auto& lineups = r.object(Reader::required(doc, "lineups", "match log"), "lineups",
                                 {"home", "away", "home_coach", "away_coach"});
  log.home.players = lineup_from_json(r, Reader::required(lineups, "home", "lineups"), "lineups.home");
  log.away.players = lineup_from_json(r, Reader::required(lineups, "away", "lineups"), "lineups.away");
  log.home.coach = Reader::str(lineups, "home_coach", "lineups");
  log.away.coach = Reader::str(lineups, "away_coach", "lineups");

  const auto& events = Reader::required(doc, "events", "match log");
  if (!events.is_array()) fail(ErrorKind::ParseError, "events must be an array");

  // bare-name references resolve against starters plus every incoming substitute
  Rosters rosters{log.home.players, log.away.players};
  for (const auto& ev : events) {
    if (!ev.is_object() || !ev.contains("in") || !ev["in"].is_object()) continue;
    auto side = parse_side(Reader::str(ev, "team", "event"));
    rosters.of(side).push_back(player_from_json(r, ev["in"], "event.in"));
  }

  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string where = "events[" + std::to_string(i) + "]";
    const auto& ev = r.object(events[i], where,
                              {"half", "offset_s", "kind", "team", "actor", "in", "out", "assist",
                               "detail"});
    MatchEvent e;
    e.clock = {Reader::integer(ev, "half", where), Reader::integer(ev, "offset_s", where)};
    e.kind = parse_event_kind(Reader::str(ev, "kind", where));
    e.team = parse_side(Reader::str(ev, "team", where));
    e.actor = player_field(r, ev, "actor", e.team, rosters, where);
    e.incoming = player_field(r, ev, "in", e.team, rosters, where);
    e.outgoing = player_field(r, ev, "out", e.team, rosters, where);
    e.assist = player_field(r, ev, "assist", e.team, rosters, where);
    if (auto it = ev.find("detail"); it != ev.end() && !it->is_null()) {
      if (!it->is_string()) fail(ErrorKind::ParseError, where + ".detail must be a string");
      e.detail = it->get<std::string>();
    }
    log.events.push_back(std::move(e));
  }

  validate_log(log);
  return log;
}

MatchLog load_match_log(const std::filesystem::path& path, IngestMode mode) {
  return match_log_from_json(read_json_file(path), mode);
}

PlayerRef player_from_json(const json& j) {
  return player_from_json(Reader(IngestMode::strict), j, "player");
}

json to_json(const PlayerRef& p) {
  return {{"name", p.name}, {"number", p.number}, {"position", std::string(to_string(p.position))}};
}

json to_json(const MatchEvent& e) {
  json j{{"half", e.clock.half},
         {"offset_s", e.clock.offset_s},
         {"kind", std::string(to_string(e.kind))},
         {"team", std::string(to_string(e.team))}};
  if (e.actor) j["actor"] = to_json(*e.actor);
  if (e.incoming) j["in"] = to_json(*e.incoming);
  if (e.outgoing) j["out"] = to_json(*e.outgoing);
  if (e.assist) j["assist"] = to_json(*e.assist);
  if (e.detail) j["detail"] = *e.detail;
  return j;
}

json to_json(const MatchLog& log) {
  json home = json::array(), away = json::array(), events = json::array();
  for (const auto& p : log.home.players) home.push_back(to_json(p));
  for (const auto& p : log.away.players) away.push_back(to_json(p));
  for (const auto& e : log.events) events.push_back(to_json(e));
  const auto& m = log.meta;
  return {{"meta",
           {{"home", m.home},
            {"away", m.away},
            {"league", m.league},
            {"season", m.season},
            {"kickoff", m.kickoff},
            {"home_color", m.home_color},
            {"away_color", m.away_color}}},
          {"lineups",
           {{"home", home}, {"away", away}, {"home_coach", log.home.coach}, {"away_coach", log.away.coach}}},
          {"events", events}};
}

json to_json(const GameState& state, const MatchMeta& meta) {
  auto lineup = [](const Lineup& l) {
    json players = json::array();
    for (const auto& p : l.players) players.push_back(to_json(p));
    return json{{"players", players}, {"coach", l.coach}};
  };
  json keys = json::array(), history = json::array();
  for (const auto& e : state.key_events) keys.push_back(to_json(e));
  for (const auto& e : state.history_events) history.push_back(to_json(e));
  return {{"home", meta.home},
          {"away", meta.away},
          {"clock", format_game_time(state.clock)},
          {"score_home", state.score_home},
          {"score_away", state.score_away},
          {"lineup_home", lineup(state.lineup_home)},
          {"lineup_away", lineup(state.lineup_away)},
          {"key_events", keys},
          {"history_events", history},
          {"history_k", state.history_capacity}};
}

SecondaryTimeline secondary_timeline_from_json(const json& doc) {
  Reader r(IngestMode::strict);
  r.object(doc, "secondary timeline", {"fixture", "goals"});
  const auto& fx = r.object(Reader::required(doc, "fixture", "secondary timeline"), "fixture",
                            {"home", "away", "kickoff"});
  SecondaryTimeline t;
  t.home = Reader::str(fx, "home", "fixture");
  t.away = Reader::str(fx, "away", "fixture");
  t.kickoff = Reader::str(fx, "kickoff", "fixture");
  const auto& goals = Reader::required(doc, "goals", "secondary timeline");
  if (!goals.is_array()) fail(ErrorKind::ParseError, "goals must be an array");
  for (const auto& g : goals) {
    r.object(g, "goal", {"time", "team", "actor", "kind"});
    SecondaryGoal goal;
    goal.clock = parse_game_time(Reader::str(g, "time", "goal"));
    goal.team = parse_side(Reader::str(g, "team", "goal"));
    if (g.contains("actor") && !g["actor"].is_null()) goal.actor = Reader::str(g, "actor", "goal");
    if (g.contains("kind")) goal.kind = parse_event_kind(Reader::str(g, "kind", "goal"));
    t.goals.push_back(std::move(goal));
  }
  return t;
}

json to_json(const ReconcileReport& report) {
  return {{"added", report.added}, {"positions", report.positions}};
}

}  // namespace pitchside::event
