#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pitchside {

using CsvRow = std::vector<std::string>;

/// RFC 4180 style: comma separated, double-quoted fields may hold commas,
/// newlines and doubled quotes. Accepts LF or CRLF line ends; blank lines are
/// skipped. Throws ParseError on an unterminated quote.
std::vector<CsvRow> parse_csv(std::string_view text);

}  // namespace pitchside
