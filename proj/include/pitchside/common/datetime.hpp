#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace pitchside {

/// UTC instant with second resolution.
using DateTime = std::chrono::sys_seconds;

/// Accepts `YYYY-MM-DD`, `YYYY-MM-DDTHH:MM[:SS]` with optional `Z` or
/// `±HH:MM` offset (a space may replace `T`). Date-only values mean 00:00 UTC.
/// Throws ParseError.
DateTime parse_iso8601(std::string_view text);

/// `YYYY-MM-DD` when the time of day is midnight, else `YYYY-MM-DDTHH:MM:SSZ`.
std::string format_iso8601(DateTime t);

/// Always `YYYY-MM-DDTHH:MM:SSZ`.
std::string format_iso8601_full(DateTime t);

}  // namespace pitchside
