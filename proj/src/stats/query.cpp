#include "pitchside/stats/query.hpp"

#include <charconv>
#include <vector>

#include "pitchside/common/error.hpp"
#include "pitchside/common/text.hpp"

namespace pitchside::stats {

std::string to_string(Stat s) {
  switch (s) {
    case Stat::goals: return "goals";
    case Stat::assists: return "assists";
    case Stat::yellow_cards: return "yellow_cards";
    case Stat::red_cards: return "red_cards";
    case Stat::cards_any: return "cards_any";
    case Stat::fouls: return "fouls";
    case Stat::corners: return "corners";
    case Stat::penalties_awarded: return "penalties_awarded";
    case Stat::free_kicks: return "free_kicks";
    case Stat::unsupported: return "unsupported";
  }
  return "unsupported";
}

std::string to_string(MethodFilter m) {
  switch (m) {
    case MethodFilter::any: return "any";
    case MethodFilter::open_play: return "open_play";
    case MethodFilter::penalty: return "penalty";
    case MethodFilter::header: return "header";
    case MethodFilter::own_goal: return "own_goal";
  }
  return "any";
}

namespace {

struct Token {
  enum Kind { word, quoted, end } kind = end;
  std::string text;
  std::size_t pos = 0;
};

[[noreturn]] void syntax(const std::string& msg, std::size_t pos) {
  fail(ErrorKind::SyntaxError, msg + " at offset " + std::to_string(pos), pos);
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (c == '"') {
      t.kind = Token::quoted;
      ++i;
      bool closed = false;
      while (i < s.size()) {
        if (s[i] == '\\') {
          if (i + 1 >= s.size()) syntax("dangling escape", i);
          t.text.push_back(s[i + 1]);
          i += 2;
        } else if (s[i] == '"') {
          ++i;
          closed = true;
          break;
        } else {
          t.text.push_back(s[i++]);
        }
      }
      if (!closed) syntax("unterminated string", t.pos);
    } else {
      t.kind = Token::word;
      while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r' && s[i] != '\n' &&
             s[i] != '"')
        t.text.push_back(s[i++]);
    }
    out.push_back(std::move(t));
  }
  out.push_back({Token::end, {}, s.size()});
  return out;
}

std::optional<Stat> stat_from_word(const std::string& w) {
  for (auto s : {Stat::goals, Stat::assists, Stat::yellow_cards, Stat::red_cards, Stat::cards_any,
                 Stat::fouls, Stat::corners, Stat::penalties_awarded, Stat::free_kicks})
    if (w == to_string(s)) return s;
  if (w == "cards") return Stat::cards_any;
  return std::nullopt;
}

bool is_identifier(std::string_view w) {
  if (w.empty()) return false;
  for (char c : w)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '%')) return false;
  return !(w.front() >= '0' && w.front() <= '9');
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  StatQuery run() {
    StatQuery q;
    const auto& head = next();
    const auto verb = keyword(head);
    if (verb == "count") {
      q.verb = Verb::count;
      const auto& st = next();
      if (st.kind != Token::word) syntax("expected a stat name", st.pos);
      const auto w = ascii_lower(st.text);
      if (auto s = stat_from_word(w)) {
        q.stat = *s;
      } else if (is_identifier(w)) {
        q.stat = Stat::unsupported;
        q.unsupported_stat = w;
      } else {
        syntax("malformed stat name '" + st.text + "'", st.pos);
      }
      const auto& subj = next();
      const auto kw = keyword(subj);
      if (kw == "player") {
        q.subject_kind = Subject::player;
      } else if (kw == "team") {
        q.subject_kind = Subject::team;
      } else {
        syntax("expected PLAYER or TEAM", subj.pos);
      }
    } else if (verb == "list") {
      expect("matches");
      expect("team");
      q.verb = Verb::list_matches;
    } else if (verb == "record") {
      expect("team");
      q.verb = Verb::team_record;
    } else if (verb == "last") {
      const auto& nt = next();
      int n = 0;
      if (nt.kind != Token::word) syntax("expected a count after LAST", nt.pos);
      auto [ptr, ec] = std::from_chars(nt.text.data(), nt.text.data() + nt.text.size(), n);
      if (ec != std::errc() || ptr != nt.text.data() + nt.text.size() || n <= 0)
        syntax("LAST needs a positive integer", nt.pos);
      q.n = n;
      expect("results");
      expect("team");
      q.verb = Verb::last_n_results;
    } else {
      syntax("expected COUNT, LIST, RECORD or LAST", head.pos);
    }
    q.subject = quoted("subject name");
    if (q.subject.empty()) syntax("subject name is empty", toks_[at_ - 1].pos);

    bool have_before = false;
    while (peek().kind != Token::end) {
      const auto& t = next();
      const auto kw = keyword(t);
      if (kw == "method") {
        if (q.method) syntax("METHOD given twice", t.pos);
        if (q.verb != Verb::count || q.stat != Stat::goals)
          syntax("METHOD applies to goal counts only", t.pos);
        const auto& m = next();
        const auto w = keyword(m);
        if (w == "any") q.method = MethodFilter::any;
        else if (w == "open_play") q.method = MethodFilter::open_play;
        else if (w == "penalty") q.method = MethodFilter::penalty;
        else if (w == "header") q.method = MethodFilter::header;
        else if (w == "own_goal") q.method = MethodFilter::own_goal;
        else syntax("unknown goal method", m.pos);
      } else if (kw == "season") {
        if (q.season) syntax("SEASON given twice", t.pos);
        const auto& s = next();
        if (s.kind == Token::end || s.text.empty()) syntax("SEASON needs a value", s.pos);
        q.season = s.text;
      } else if (kw == "league") {
        if (q.league) syntax("LEAGUE given twice", t.pos);
        q.league = quoted("league name");
      } else if (kw == "venue") {
        if (q.venue) syntax("VENUE given twice", t.pos);
        if (q.subject_kind != Subject::team) syntax("VENUE applies to team subjects only", t.pos);
        const auto& v = next();
        const auto w = keyword(v);
        if (w == "home") q.venue = Venue::home;
        else if (w == "away") q.venue = Venue::away;
        else syntax("VENUE must be HOME or AWAY", v.pos);
      } else if (kw == "for") {
        if (q.for_team) syntax("FOR given twice", t.pos);
        if (q.subject_kind != Subject::player) syntax("FOR applies to player subjects only", t.pos);
        q.for_team = quoted("team name");
      } else if (kw == "before") {
        if (have_before) syntax("BEFORE given twice", t.pos);
        const auto& d = next();
        if (d.kind != Token::word) syntax("BEFORE needs an ISO-8601 date", d.pos);
        try {
          q.as_of = parse_iso8601(d.text);
        } catch (const Error&) {
          syntax("malformed date '" + d.text + "'", d.pos);
        }
        have_before = true;
      } else {
        syntax("unexpected '" + t.text + "'", t.pos);
      }
    }
    if (!have_before)
      fail(ErrorKind::MissingBefore, "every query needs a BEFORE <date> clause");
    return q;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& next() {
    const auto& t = toks_[at_];
    if (t.kind != Token::end) ++at_;
    return t;
  }
  static std::string keyword(const Token& t) {
    return t.kind == Token::word ? ascii_lower(t.text) : std::string();
  }
  void expect(std::string_view kw) {
    const auto& t = next();
    if (keyword(t) != kw) syntax("expected " + ascii_lower(kw), t.pos);
  }
  std::string quoted(const char* what) {
    const auto& t = next();
    if (t.kind != Token::quoted) syntax(std::string("expected a quoted ") + what, t.pos);
    return t.text;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

bool bare_safe(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '"') return false;
  return true;
}

}  // namespace

StatQuery parse_query(std::string_view text) { return Parser(text).run(); }

std::string print_query(const StatQuery& q) {
  std::string out;
  switch (q.verb) {
    case Verb::count:
      out = "COUNT ";
      out += q.stat == Stat::unsupported ? q.unsupported_stat
                                         : to_string(q.stat.value_or(Stat::goals));
      out += q.subject_kind == Subject::player ? " PLAYER " : " TEAM ";
      break;
    case Verb::list_matches: out = "LIST MATCHES TEAM "; break;
    case Verb::team_record: out = "RECORD TEAM "; break;
    case Verb::last_n_results:
      out = "LAST " + std::to_string(q.n.value_or(1)) + " RESULTS TEAM ";
      break;
  }
  out += quote(q.subject);
  if (q.method) out += " METHOD " + to_string(*q.method);
  if (q.season) out += " SEASON " + (bare_safe(*q.season) ? *q.season : quote(*q.season));
  if (q.league) out += " LEAGUE " + quote(*q.league);
  if (q.venue) out += q.venue == Venue::home ? " VENUE HOME" : " VENUE AWAY";
  if (q.for_team) out += " FOR " + quote(*q.for_team);
  out += " BEFORE " + format_iso8601(q.as_of);
  return out;
}

}  // namespace pitchside::stats
