#include "pitchside/scene/colors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "pitchside/common/text.hpp"

namespace pitchside::scene {
namespace {

const std::unordered_set<std::string>& filler_words() {
  static const std::unordered_set<std::string> words = {
      "and", "with", "in", "of", "a", "the", "striped", "stripes", "stripe", "hoops", "hooped",
      "jersey", "jerseys", "shirt", "shirts", "kit", "kits", "colored", "coloured", "color",
      "colour", "trim", "accents", "sleeves", "shorts", "socks", "team", "wearing", "mostly",
      "all", "plain", "solid", "&", "on", "or"};
  return words;
}

const std::unordered_set<std::string>& modifiers() {
  static const std::unordered_set<std::string> words = {"light", "dark", "pale", "deep",
                                                         "bright", "sky", "navy", "royal"};
  return words;
}

// Fused or single tokens -> canonical token.
const std::unordered_map<std::string, std::string>& synonyms() {
  static const std::unordered_map<std::string, std::string> table = {
      {"grey", "gray"},
      {"navy", "dark-blue"},
      {"navy-blue", "dark-blue"},
      {"deep-blue", "dark-blue"},
      {"royal-blue", "blue"},
      {"sky-blue", "light-blue"},
      {"pale-blue", "light-blue"},
      {"skyblue", "light-blue"},
      {"cyan", "light-blue"},
      {"azure", "light-blue"},
      {"celeste", "light-blue"},
      {"crimson", "red"},
      {"scarlet", "red"},
      {"bright-red", "red"},
      {"maroon", "claret"},
      {"burgundy", "claret"},
      {"wine", "claret"},
      {"violet", "purple"},
      {"lilac", "purple"},
      {"gold", "yellow"},
      {"golden", "yellow"},
      {"amber", "orange"},
      {"lime", "light-green"},
      {"bright-green", "green"},
      {"pale-green", "light-green"},
      {"deep-green", "dark-green"},
      {"silver", "gray"},
      {"light-grey", "light-gray"},
      {"dark-grey", "dark-gray"},
      {"ivory", "white"},
      {"cream", "white"},
  };
  return table;
}

const std::unordered_set<std::string>& hue_words() {
  static const std::unordered_set<std::string> words = {
      "red",  "blue",  "green", "yellow", "orange", "purple", "pink",  "black",
      "white", "gray", "grey",  "brown",  "claret", "gold",   "silver"};
  return words;
}

std::string canonical_token(const std::string& token) {
  const auto& table = synonyms();
  const auto it = table.find(token);
  return it == table.end() ? token : it->second;
}

std::string base_hue(const std::string& token) {
  const auto dash = token.rfind('-');
  const std::string tail = dash == std::string::npos ? token : token.substr(dash + 1);
  if (tail == "claret") return "red";
  return tail;
}

std::set<std::string> base_hues(const std::string& canonical) {
  std::set<std::string> out;
  for (const auto& part : split_if(canonical, [](char c) { return c == '/'; }))
    if (!part.empty()) out.insert(base_hue(std::string(part)));
  return out;
}

int affinity(const std::string& claim, const std::string& known) {
  if (known.empty() || claim.empty()) return 0;
  if (claim == known) return 2;
  const auto a = base_hues(claim);
  const auto b = base_hues(known);
  for (const auto& h : a)
    if (b.contains(h)) return 1;
  return 0;
}

bool lineup_has_number(const event::Lineup& lineup, int number) {
  return std::any_of(lineup.players.begin(), lineup.players.end(),
                     [&](const event::PlayerRef& p) { return p.number == number; });
}

// Most-voted colour, or nullopt when the top count is shared.
std::optional<std::string> top_vote(const std::map<std::string, int>& tally) {
  std::optional<std::string> best;
  int best_count = 0;
  bool tied = false;
  for (const auto& [color, count] : tally) {
    if (count > best_count) {
      best = color;
      best_count = count;
      tied = false;
    } else if (count == best_count) {
      tied = true;
    }
  }
  if (tied) return std::nullopt;
  return best;
}

}  // namespace

std::string normalize_color(std::string_view free_text) {
  std::vector<std::string> raw;
  std::string cur;
  for (char c : ascii_lower(free_text)) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (keep) {
      cur.push_back(c);
    } else if (!cur.empty()) {
      raw.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) raw.push_back(std::move(cur));

  // '/' separates already-canonical parts; treat it as a token boundary too.
  std::vector<std::string> tokens;
  for (auto& t : raw) {
    while (!t.empty() && t.front() == '-') t.erase(t.begin());
    while (!t.empty() && t.back() == '-') t.pop_back();
    if (t.empty() || filler_words().contains(t)) continue;
    tokens.push_back(std::move(t));
  }

  std::set<std::string> parts;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (modifiers().contains(t)) {
      const bool blue_only = t == "sky" || t == "navy" || t == "royal";
      const bool fuses = i + 1 < tokens.size() && hue_words().contains(tokens[i + 1]) &&
                         (!blue_only || tokens[i + 1] == "blue");
      if (fuses) {
        parts.insert(canonical_token(t + "-" + canonical_token(tokens[i + 1])));
        ++i;
      } else if (synonyms().contains(t)) {
        parts.insert(canonical_token(t));
      }
      // a dangling modifier carries no hue
      continue;
    }
    parts.insert(canonical_token(t));
  }

  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out.push_back('/');
    out += p;
  }
  return out;
}

ColorResolution resolve_team_colors(std::span<const ColorClaim> claims,
                                    const event::Lineup& home_lineup,
                                    const event::Lineup& away_lineup,
                                    const std::optional<TeamColors>& known) {
  std::optional<TeamColors> known_norm;
  if (known) known_norm = TeamColors{normalize_color(known->home), normalize_color(known->away)};

  std::set<std::string> candidates;
  std::map<std::string, int> home_votes;
  std::map<std::string, int> away_votes;
  std::vector<std::size_t> abstained;

  for (std::size_t i = 0; i < claims.size(); ++i) {
    const std::string color = normalize_color(claims[i].color);
    if (color.empty()) {
      abstained.push_back(i);
      continue;
    }
    candidates.insert(color);

    int home_aff = 0;
    int away_aff = 0;
    if (known_norm) {
      home_aff = affinity(color, known_norm->home);
      away_aff = affinity(color, known_norm->away);
    }
    if (home_aff == away_aff && claims[i].number) {
      const bool in_home = lineup_has_number(home_lineup, *claims[i].number);
      const bool in_away = lineup_has_number(away_lineup, *claims[i].number);
      if (in_home != in_away) {
        home_aff = in_home ? 1 : 0;
        away_aff = in_away ? 1 : 0;
      }
    }
    if (home_aff > away_aff) {
      ++home_votes[color];
    } else if (away_aff > home_aff) {
      ++away_votes[color];
    } else {
      abstained.push_back(i);
    }
  }

  const std::vector<std::string> cand_list(candidates.begin(), candidates.end());
  auto ambiguous = [&](std::string reason) -> ColorResolution {
    return AmbiguityReport{cand_list, abstained, std::move(reason)};
  };

  if (candidates.empty()) {
    if (known_norm && !known_norm->home.empty() && !known_norm->away.empty() &&
        known_norm->home != known_norm->away)
      return TeamColors{known_norm->home, known_norm->away};
    return ambiguous("no usable colour claims");
  }

  std::optional<std::string> home = top_vote(home_votes);
  std::optional<std::string> away = top_vote(away_votes);
  if (!home_votes.empty() && !home) return ambiguous("home colour votes are tied");
  if (!away_votes.empty() && !away) return ambiguous("away colour votes are tied");

  auto leftover_for = [&](const std::optional<std::string>& other) -> std::optional<std::string> {
    std::vector<std::string> rest;
    for (const auto& c : cand_list)
      if (!other || c != *other) rest.push_back(c);
    if (rest.size() == 1) return rest.front();
    return std::nullopt;
  };

  if (!home && away) home = leftover_for(away);
  if (!away && home) away = leftover_for(home);
  if (!home && !away) {
    if (known_norm && candidates.size() == 1 && candidates.contains(known_norm->home) &&
        known_norm->home != known_norm->away)
      return TeamColors{known_norm->home, known_norm->away};
    return ambiguous("claims do not distinguish the two sides");
  }
  if (!home && known_norm && !known_norm->home.empty() && known_norm->home != *away)
    home = known_norm->home;
  if (!away && known_norm && !known_norm->away.empty() && known_norm->away != *home)
    away = known_norm->away;
  if (!home || !away) return ambiguous("one side has no attributable colour");
  if (*home == *away) return ambiguous("both sides resolve to the same colour");
  return TeamColors{*home, *away};
}

}  // namespace pitchside::scene
