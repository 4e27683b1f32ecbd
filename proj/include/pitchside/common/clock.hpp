#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace pitchside {

/// Game clock as (half, seconds into the half). Totally ordered.
struct MatchClock {
  int half = 1;
  int offset_s = 0;

  static constexpr int kMaxOffset = 3600;

  static constexpr MatchClock kickoff() { return {1, 0}; }
  static constexpr MatchClock full_time() { return {2, kMaxOffset}; }

  bool valid() const noexcept {
    return (half == 1 || half == 2) && offset_s >= 0 && offset_s <= kMaxOffset;
  }

  auto operator<=>(const MatchClock&) const = default;
};

/// Parses "H - MM:SS" (the ingestion format) as well as "H:MM:SS".
/// "FT" maps to MatchClock::full_time(). Throws ParseError.
MatchClock parse_game_time(std::string_view text);

/// Renders "H - MM:SS".
std::string format_game_time(const MatchClock& clock);

}  // namespace pitchside
