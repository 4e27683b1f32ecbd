#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pitchside/event/types.hpp"

namespace pitchside::scene {

/// Canonical jersey colour label: lowercased, tokenized, modifiers fused
/// ("light blue" -> "light-blue"), synonyms mapped, pattern and filler words
/// dropped, tokens deduplicated and sorted, joined by '/'.
/// "red and blue" and "blue and red striped" both become "blue/red".
/// Idempotent. Returns an empty string when no colour word survives.
std::string normalize_color(std::string_view free_text);

/// A colour sighting, optionally with a jersey number seen on the same player.
struct ColorClaim {
  std::string color;
  std::optional<int> number;
};

struct TeamColors {
  std::string home;
  std::string away;
  bool operator==(const TeamColors&) const = default;
};

/// Returned when the claims cannot settle both sides; a person has to decide.
struct AmbiguityReport {
  std::vector<std::string> candidates;        // canonical colours seen
  std::vector<std::size_t> unresolved_claims;  // claim indices that cast no vote
  std::string reason;
};

using ColorResolution = std::variant<TeamColors, AmbiguityReport>;

/// Each claim votes for the side whose known (traditional) colour it matches
/// best: exact canonical match beats a shared base hue. When both sides match
/// equally, a jersey number found in exactly one lineup decides; otherwise the
/// claim abstains. Each side takes its most-voted colour. A side left without
/// votes takes the only remaining candidate colour, if there is exactly one.
ColorResolution resolve_team_colors(std::span<const ColorClaim> claims,
                                    const event::Lineup& home_lineup,
                                    const event::Lineup& away_lineup,
                                    const std::optional<TeamColors>& known = std::nullopt);

}  // namespace pitchside::scene
