#include "pitchside/common/clock.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "pitchside/common/error.hpp"

namespace pitchside {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool number(int& out) {
    skip_space();
    auto first = s_.data() + pos_;
    auto last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr == first) return false;
    pos_ += static_cast<std::size_t>(ptr - first);
    return true;
  }

  bool done() {
    skip_space();
    return pos_ == s_.size();
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MatchClock parse_game_time(std::string_view text) {
  auto bad = [&] { fail(ErrorKind::ParseError, "bad game time '" + std::string(text) + "'"); };

  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "FT" || trimmed == "ft") return MatchClock::full_time();

  Cursor c(trimmed);
  int half = 0, minutes = 0, seconds = 0;
  if (!c.number(half)) bad();
  if (!c.eat('-') && !c.eat(':')) bad();
  if (!c.number(minutes) || !c.eat(':') || !c.number(seconds) || !c.done()) bad();
  if (seconds < 0 || seconds > 59 || minutes < 0) bad();

  MatchClock clock{half, minutes * 60 + seconds};
  if (!clock.valid()) bad();
  return clock;
}

std::string format_game_time(const MatchClock& clock) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%d - %02d:%02d", clock.half, clock.offset_s / 60,
                clock.offset_s % 60);
  return buf;
}

}  // namespace pitchside
