#include "pitchside/stats/store.hpp"

#include <charconv>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "pitchside/common/csv.hpp"
#include "pitchside/common/error.hpp"
#include "pitchside/common/files.hpp"
#include "pitchside/common/text.hpp"

namespace pitchside::stats {

std::string to_string(EventType t) {
  switch (t) {
    case EventType::goal: return "goal";
    case EventType::assist: return "assist";
    case EventType::yellow_card: return "yellow_card";
    case EventType::red_card: return "red_card";
    case EventType::foul: return "foul";
    case EventType::corner: return "corner";
    case EventType::penalty_awarded: return "penalty_awarded";
    case EventType::free_kick: return "free_kick";
  }
  return "goal";
}

EventType parse_event_type(std::string_view s) {
  const auto v = ascii_lower(trim(s));
  for (auto t : {EventType::goal, EventType::assist, EventType::yellow_card, EventType::red_card,
                 EventType::foul, EventType::corner, EventType::penalty_awarded,
                 EventType::free_kick})
    if (v == to_string(t)) return t;
  fail(ErrorKind::ParseError, "unknown stat event kind '" + std::string(s) + "'");
}

std::string to_string(GoalMethod m) {
  switch (m) {
    case GoalMethod::open_play: return "open_play";
    case GoalMethod::penalty: return "penalty";
    case GoalMethod::header: return "header";
    case GoalMethod::own_goal: return "own_goal";
  }
  return "open_play";
}

GoalMethod parse_goal_method(std::string_view s) {
  const auto v = ascii_lower(trim(s));
  for (auto m : {GoalMethod::open_play, GoalMethod::penalty, GoalMethod::header,
                 GoalMethod::own_goal})
    if (v == to_string(m)) return m;
  fail(ErrorKind::ParseError, "unknown goal method '" + std::string(s) + "'");
}

StatStore::StatStore(std::vector<MatchRecord> matches, std::vector<StatEvent> events,
                     std::vector<PlayerBio> players)
    : matches_(std::move(matches)), events_(std::move(events)), players_(std::move(players)) {
  std::unordered_map<std::string, const MatchRecord*> by_id;
  for (const auto& m : matches_) {
    if (m.match_id.empty()) fail(ErrorKind::InvalidInput, "match with empty id");
    if (!by_id.emplace(m.match_id, &m).second)
      fail(ErrorKind::InvalidInput, "duplicate match id " + m.match_id);
    if (fold_name(m.home) == fold_name(m.away))
      fail(ErrorKind::InvalidInput, "match " + m.match_id + " has the same team twice");
    if (m.home_goals < 0 || m.away_goals < 0)
      fail(ErrorKind::InvalidInput, "match " + m.match_id + " has a negative score");
  }
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const auto& e = events_[i];
    auto it = by_id.find(e.match_id);
    if (it == by_id.end())
      fail(ErrorKind::InvalidInput, "stat event references unknown match " + e.match_id, i);
    const auto team = fold_name(e.team);
    if (team != fold_name(it->second->home) && team != fold_name(it->second->away))
      fail(ErrorKind::InvalidInput,
           "stat event team " + e.team + " does not play in match " + e.match_id, i);
    if (e.method && e.type != EventType::goal)
      fail(ErrorKind::InvalidInput, "goal method given on a non-goal stat event", i);
    if (!e.clock.valid()) fail(ErrorKind::InvalidInput, "stat event clock out of range", i);
  }
}

const MatchRecord& StatStore::match(std::string_view match_id) const {
  for (const auto& m : matches_)
    if (m.match_id == match_id) return m;
  fail(ErrorKind::UnknownEntity, "no match " + std::string(match_id));
}

namespace {

std::vector<CsvRow> read_table(const std::filesystem::path& path,
                               std::initializer_list<std::string_view> header) {
  auto rows = parse_csv(read_text_file(path));
  const auto name = path.filename().string();
  if (rows.empty()) fail(ErrorKind::ParseError, name + " has no header row");
  const auto& head = rows.front();
  if (head.size() != header.size())
    fail(ErrorKind::ParseError, name + " must have " + std::to_string(header.size()) + " columns");
  std::size_t c = 0;
  for (auto expected : header) {
    if (ascii_lower(trim(head[c])) != expected)
      fail(ErrorKind::ParseError, name + " column " + std::to_string(c + 1) + " must be '" +
                                      std::string(expected) + "'");
    ++c;
  }
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r].size() != header.size())
      fail(ErrorKind::ParseError, name + " row " + std::to_string(r) + " has the wrong width");
  rows.erase(rows.begin());
  return rows;
}

int parse_int(std::string_view s, const std::string& where) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(ErrorKind::ParseError, where + ": '" + std::string(s) + "' is not an integer");
  return v;
}

}  // namespace

StatStore StatStore::load(const std::filesystem::path& dir) {
  std::vector<MatchRecord> matches;
  for (const auto& row : read_table(dir / "matches.csv", {"match_id", "home", "away", "league",
                                                          "season", "kickoff", "final_score"})) {
    MatchRecord m;
    m.match_id = std::string(trim(row[0]));
    m.home = std::string(trim(row[1]));
    m.away = std::string(trim(row[2]));
    m.league = std::string(trim(row[3]));
    m.season = std::string(trim(row[4]));
    m.kickoff = parse_iso8601(row[5]);
    const auto score = std::string(trim(row[6]));
    const auto dash = score.find('-');
    if (dash == std::string::npos)
      fail(ErrorKind::ParseError, "match " + m.match_id + ": final_score must be H-A");
    m.home_goals = parse_int(std::string_view(score).substr(0, dash), "final_score");
    m.away_goals = parse_int(std::string_view(score).substr(dash + 1), "final_score");
    matches.push_back(std::move(m));
  }

  std::vector<StatEvent> events;
  for (const auto& row : read_table(dir / "stat_events.csv",
                                    {"match_id", "clock", "kind", "team", "player", "method"})) {
    StatEvent e;
    e.match_id = std::string(trim(row[0]));
    e.clock = parse_game_time(row[1]);
    e.type = parse_event_type(row[2]);
    e.team = std::string(trim(row[3]));
    e.player = std::string(trim(row[4]));
    if (!trim(row[5]).empty()) e.method = parse_goal_method(row[5]);
    if (e.type == EventType::goal && !e.method) e.method = GoalMethod::open_play;
    events.push_back(std::move(e));
  }

  std::vector<PlayerBio> players;
  for (const auto& row :
       read_table(dir / "players.csv", {"name", "nationality", "height_cm", "birthdate"})) {
    PlayerBio p;
    p.name = std::string(trim(row[0]));
    p.nationality = std::string(trim(row[1]));
    p.height_cm = parse_int(row[2], "height_cm of " + p.name);
    p.birthdate = std::string(trim(row[3]));
    parse_iso8601(p.birthdate);
    players.push_back(std::move(p));
  }
  return StatStore(std::move(matches), std::move(events), std::move(players));
}

const PlayerBio& player_background(const StatStore& store, std::string_view name) {
  const auto key = fold_name(name);
  const PlayerBio* found = nullptr;
  for (const auto& p : store.players()) {
    if (fold_name(p.name) != key) continue;
    if (found)
      fail(ErrorKind::DuplicateEntity,
           "several players are named '" + std::string(name) + "'; disambiguation required");
    found = &p;
  }
  if (!found) fail(ErrorKind::UnknownEntity, "no player named '" + std::string(name) + "'");
  return *found;
}

}  // namespace pitchside::stats
