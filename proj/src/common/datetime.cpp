#include "pitchside/common/datetime.hpp"

#include <cctype>
#include <cstdio>

#include "pitchside/common/error.hpp"

namespace pitchside {

namespace {

bool digits(std::string_view s, std::size_t pos, std::size_t n, int& out) {
  if (pos + n > s.size()) return false;
  int v = 0;
  for (std::size_t i = pos; i < pos + n; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = v;
  return true;
}

}  // namespace

DateTime parse_iso8601(std::string_view text) {
  using namespace std::chrono;
  auto bad = [&](const char* why) {
    fail(ErrorKind::ParseError,
         "bad ISO-8601 datetime '" + std::string(text) + "': " + why);
  };

  int y = 0, mo = 0, d = 0;
  if (!digits(text, 0, 4, y) || text.size() < 10 || text[4] != '-' ||
      !digits(text, 5, 2, mo) || text[7] != '-' || !digits(text, 8, 2, d))
    bad("expected YYYY-MM-DD");

  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) bad("calendar date out of range");

  sys_seconds t = sys_days{ymd};
  std::size_t pos = 10;
  if (pos == text.size()) return t;

  if (text[pos] != 'T' && text[pos] != 't' && text[pos] != ' ') bad("expected 'T'");
  ++pos;
  int hh = 0, mm = 0, ss = 0;
  if (!digits(text, pos, 2, hh) || pos + 2 >= text.size() || text[pos + 2] != ':' ||
      !digits(text, pos + 3, 2, mm))
    bad("expected HH:MM");
  pos += 5;
  if (pos < text.size() && text[pos] == ':') {
    if (!digits(text, pos + 1, 2, ss)) bad("expected seconds");
    pos += 3;
    // fractional seconds are truncated
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
  }
  if (hh > 23 || mm > 59 || ss > 60) bad("time of day out of range");
  t += hours{hh} + minutes{mm} + seconds{ss};

  if (pos == text.size()) return t;
  if (text[pos] == 'Z' || text[pos] == 'z') {
    if (pos + 1 != text.size()) bad("trailing characters");
    return t;
  }
  if (text[pos] == '+' || text[pos] == '-') {
    int oh = 0, om = 0;
    const int sign = text[pos] == '+' ? 1 : -1;
    if (!digits(text, pos + 1, 2, oh)) bad("bad offset");
    std::size_t next = pos + 3;
    if (next < text.size() && text[next] == ':') ++next;
    if (!digits(text, next, 2, om) || next + 2 != text.size()) bad("bad offset");
    // local = UTC + offset, so UTC = local - offset
    return t - sign * (hours{oh} + minutes{om});
  }
  fail(ErrorKind::ParseError, "bad ISO-8601 datetime '" + std::string(text) + "': trailing characters");
}

std::string format_iso8601_full(DateTime t) {
  using namespace std::chrono;
  const auto day_point = floor<days>(t);
  const year_month_day ymd{day_point};
  const hh_mm_ss tod{t - day_point};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02ldZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<long>(tod.hours().count()),
                static_cast<long>(tod.minutes().count()),
                static_cast<long>(tod.seconds().count()));
  return buf;
}

std::string format_iso8601(DateTime t) {
  using namespace std::chrono;
  const auto day_point = floor<days>(t);
  if (t == day_point) return format_iso8601_full(t).substr(0, 10);
  return format_iso8601_full(t);
}

}  // namespace pitchside
