#include "pitchside/event/types.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "pitchside/common/error.hpp"

namespace pitchside::event {

namespace {

constexpr std::array<std::pair<EventKind, std::string_view>, 13> kKinds{{
    {EventKind::goal, "goal"},
    {EventKind::own_goal, "own_goal"},
    {EventKind::penalty_goal, "penalty_goal"},
    {EventKind::header_goal, "header_goal"},
    {EventKind::yellow_card, "yellow_card"},
    {EventKind::red_card, "red_card"},
    {EventKind::substitution, "substitution"},
    {EventKind::corner, "corner"},
    {EventKind::foul, "foul"},
    {EventKind::free_kick, "free_kick"},
    {EventKind::penalty_awarded, "penalty_awarded"},
    {EventKind::offside, "offside"},
    {EventKind::commentary, "commentary"},
}};

}  // namespace

bool Lineup::contains(const PlayerRef& p) const {
  return std::find(players.begin(), players.end(), p) != players.end();
}

const PlayerRef* Lineup::find_by_name(std::string_view name) const {
  auto it = std::find_if(players.begin(), players.end(),
                         [&](const PlayerRef& p) { return p.name == name; });
  return it == players.end() ? nullptr : &*it;
}

DateTime MatchMeta::kickoff_time() const { return parse_iso8601(kickoff); }

std::string_view to_string(Position p) noexcept {
  switch (p) {
    case Position::goalkeeper: return "goalkeeper";
    case Position::defender: return "defender";
    case Position::midfielder: return "midfielder";
    case Position::forward: return "forward";
  }
  return "?";
}

std::string_view to_string(Side s) noexcept { return s == Side::home ? "home" : "away"; }

std::string_view to_string(EventKind k) noexcept {
  for (const auto& [kind, name] : kKinds)
    if (kind == k) return name;
  return "?";
}

Position parse_position(std::string_view s) {
  if (s == "goalkeeper") return Position::goalkeeper;
  if (s == "defender") return Position::defender;
  if (s == "midfielder") return Position::midfielder;
  if (s == "forward") return Position::forward;
  fail(ErrorKind::ParseError, "unknown position '" + std::string(s) + "'");
}

Side parse_side(std::string_view s) {
  if (s == "home") return Side::home;
  if (s == "away") return Side::away;
  fail(ErrorKind::ParseError, "unknown side '" + std::string(s) + "'");
}

EventKind parse_event_kind(std::string_view s) {
  for (const auto& [kind, name] : kKinds)
    if (name == s) return kind;
  fail(ErrorKind::ParseError, "unknown event kind '" + std::string(s) + "'");
}

}  // namespace pitchside::event
