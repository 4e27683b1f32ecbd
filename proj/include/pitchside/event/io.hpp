#pragma once

#include <filesystem>

#include "json.hpp"
#include "pitchside/event/curation.hpp"
#include "pitchside/event/game_state.hpp"

namespace pitchside::event {

enum class IngestMode { strict, lenient };

/// Match log document:
///   {meta:{home,away,league,season,kickoff,home_color,away_color},
///    lineups:{home:[{name,number,position}x11], away:[...], home_coach, away_coach},
///    events:[{half,offset_s,kind,team,actor?,in?,out?,assist?,detail?}]}
/// Player fields take either a {name,number,position} object or a bare name
/// resolved against the team's starters and substitutes. Strict mode rejects
/// unknown fields. The result is validated (validate_log).
MatchLog match_log_from_json(const nlohmann::json& doc, IngestMode mode = IngestMode::strict);
MatchLog load_match_log(const std::filesystem::path& path, IngestMode mode = IngestMode::strict);
nlohmann::json to_json(const MatchLog& log);

nlohmann::json to_json(const PlayerRef& p);
/// {name, number, position}; unknown fields rejected.
PlayerRef player_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MatchEvent& e);
nlohmann::json to_json(const GameState& state, const MatchMeta& meta);

/// {fixture:{home,away,kickoff}, goals:[{time:"H - MM:SS", team, actor?, kind?}]}
SecondaryTimeline secondary_timeline_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const ReconcileReport& report);

}  // namespace pitchside::event
