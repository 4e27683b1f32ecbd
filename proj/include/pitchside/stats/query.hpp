#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pitchside/common/datetime.hpp"
#include "pitchside/stats/store.hpp"

namespace pitchside::stats {

enum class Verb { count, list_matches, team_record, last_n_results };
enum class Subject { player, team };

enum class Stat {
  goals,
  assists,
  yellow_cards,
  red_cards,
  cards_any,
  fouls,
  corners,
  penalties_awarded,
  free_kicks,
  /// Parsed but outside the schema; executing it throws UnsupportedStat.
  unsupported,
};

/// METHOD clause values. `any` counts every goal including own goals.
enum class MethodFilter { any, open_play, penalty, header, own_goal };

enum class Venue { home, away };

/// Grammar (keywords case-insensitive, clauses in any order, each at most once):
///
///   COUNT <stat> (PLAYER|TEAM) "<name>" <clauses>
///   LIST MATCHES TEAM "<name>" <clauses>
///   RECORD TEAM "<name>" <clauses>
///   LAST <n> RESULTS TEAM "<name>" <clauses>
///
///   clause := METHOD <method>        goals only
///           | SEASON <token|"text">
///           | LEAGUE "<text>"
///           | VENUE (HOME|AWAY)      team subjects only
///           | FOR "<team>"           player subjects only
///           | BEFORE <ISO-8601>      required
///
/// Quoted strings escape '"' and '\' with a backslash.
struct StatQuery {
  Verb verb = Verb::count;
  Subject subject_kind = Subject::team;
  std::string subject;
  std::optional<Stat> stat;        // present iff verb == count
  std::string unsupported_stat;    // raw identifier when stat == unsupported
  std::optional<MethodFilter> method;
  std::optional<std::string> season;
  std::optional<std::string> league;
  std::optional<Venue> venue;
  std::optional<std::string> for_team;
  DateTime as_of;
  std::optional<int> n;            // present iff verb == last_n_results

  bool operator==(const StatQuery&) const = default;
};

std::string to_string(Stat s);
std::string to_string(MethodFilter m);

/// Throws SyntaxError (index = byte offset) and MissingBefore.
StatQuery parse_query(std::string_view text);

/// Canonical rendering; parse_query(print_query(q)) == q.
std::string print_query(const StatQuery& q);

}  // namespace pitchside::stats
