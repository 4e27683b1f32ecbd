#include "pitchside/eval/claims.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <regex>
#include <set>

#include "pitchside/common/error.hpp"
#include "pitchside/common/text.hpp"
#include "pitchside/event/game_state.hpp"
#include "pitchside/stats/execute.hpp"
#include "pitchside/stats/query.hpp"

namespace pitchside::eval {

using event::EventKind;
using event::Side;
using nlohmann::json;

std::string_view to_string(EventClass c) noexcept {
  switch (c) {
    case EventClass::goal: return "goal";
    case EventClass::yellow_card: return "yellow_card";
    case EventClass::red_card: return "red_card";
    case EventClass::card: return "card";
    case EventClass::corner: return "corner";
    case EventClass::foul: return "foul";
    case EventClass::free_kick: return "free_kick";
    case EventClass::penalty: return "penalty";
    case EventClass::substitution: return "substitution";
    case EventClass::offside: return "offside";
  }
  return "?";
}

std::string_view to_string(ClaimKind k) noexcept {
  switch (k) {
    case ClaimKind::scoreline: return "scoreline";
    case ClaimKind::ordinal_event_count: return "ordinal_event_count";
    case ClaimKind::external_stat: return "external_stat";
  }
  return "?";
}

std::string_view to_string(VerdictStatus s) noexcept {
  switch (s) {
    case VerdictStatus::supported: return "supported";
    case VerdictStatus::contradicted: return "contradicted";
    case VerdictStatus::unverifiable: return "unverifiable";
  }
  return "?";
}

namespace {

struct Token {
  std::string text;  // ASCII-lowercased; curly apostrophes become '
  std::size_t begin = 0;
  std::size_t end = 0;
};

bool word_byte(unsigned char c) { return std::isalnum(c) != 0 || c == '\''; }

std::vector<Token> tokenize(std::string_view s, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const bool curly = s.compare(i, 3, "\xE2\x80\x99") == 0;
    if (!word_byte(static_cast<unsigned char>(s[i])) && !curly) {
      ++i;
      continue;
    }
    Token t;
    t.begin = offset + i;
    while (i < s.size()) {
      if (s.compare(i, 3, "\xE2\x80\x99") == 0) {
        t.text.push_back('\'');
        i += 3;
      } else if (word_byte(static_cast<unsigned char>(s[i]))) {
        t.text.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(s[i]))));
        ++i;
      } else {
        break;
      }
    }
    t.end = offset + i;
    while (!t.text.empty() && t.text.front() == '\'') t.text.erase(t.text.begin());
    if (!t.text.empty()) out.push_back(std::move(t));
  }
  return out;
}

struct Sentence {
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<Sentence> sentences(std::string_view body) {
  std::vector<Sentence> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c != '.' && c != '!' && c != '?' && c != '\n') continue;
    const bool boundary = i + 1 == body.size() || body[i + 1] == ' ' || body[i + 1] == '\n' ||
                          body[i + 1] == '"' || body[i + 1] == ')';
    if (!boundary) continue;
    if (i > start) out.push_back({start, i + 1});
    start = i + 1;
  }
  if (start < body.size()) out.push_back({start, body.size()});
  return out;
}

struct Noun {
  std::vector<std::string_view> words;
  EventClass cls;
};

const std::vector<Noun>& nouns() {
  static const std::vector<Noun> all = {
      {{"yellow", "cards"}, EventClass::yellow_card}, {{"yellow", "card"}, EventClass::yellow_card},
      {{"red", "cards"}, EventClass::red_card},       {{"red", "card"}, EventClass::red_card},
      {{"corner", "kicks"}, EventClass::corner},      {{"corner", "kick"}, EventClass::corner},
      {{"free", "kicks"}, EventClass::free_kick},     {{"free", "kick"}, EventClass::free_kick},
      {{"yellows"}, EventClass::yellow_card},         {{"cards"}, EventClass::card},
      {{"card"}, EventClass::card},                   {{"bookings"}, EventClass::card},
      {{"booking"}, EventClass::card},                {{"goals"}, EventClass::goal},
      {{"goal"}, EventClass::goal},                   {{"corners"}, EventClass::corner},
      {{"corner"}, EventClass::corner},               {{"fouls"}, EventClass::foul},
      {{"foul"}, EventClass::foul},                   {{"penalties"}, EventClass::penalty},
      {{"penalty"}, EventClass::penalty},             {{"substitutions"}, EventClass::substitution},
      {{"substitution"}, EventClass::substitution},   {{"offsides"}, EventClass::offside},
      {{"offside"}, EventClass::offside}};
  return all;
}

struct NounHit {
  EventClass cls;
  std::size_t length;
};

std::optional<NounHit> noun_at(const std::vector<Token>& t, std::size_t i) {
  for (const auto& n : nouns()) {
    if (i + n.words.size() > t.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < n.words.size() && ok; ++k) ok = t[i + k].text == n.words[k];
    if (ok) return NounHit{n.cls, n.words.size()};
  }
  return std::nullopt;
}

const std::map<std::string, int, std::less<>>& ordinals() {
  static const std::map<std::string, int, std::less<>> m = {
      {"first", 1}, {"second", 2}, {"third", 3},   {"fourth", 4}, {"forth", 4}, {"fifth", 5},
      {"sixth", 6}, {"seventh", 7}, {"eighth", 8}, {"ninth", 9},  {"tenth", 10}};
  return m;
}

std::optional<int> cardinal(const Token& t, std::string_view body) {
  static const std::map<std::string, int, std::less<>> words = {
      {"one", 1}, {"two", 2},   {"three", 3}, {"four", 4}, {"five", 5},
      {"six", 6}, {"seven", 7}, {"eight", 8}, {"nine", 9}, {"ten", 10}};
  if (auto it = words.find(t.text); it != words.end()) return it->second;
  if (t.text.size() <= 2 && std::all_of(t.text.begin(), t.text.end(), ::isdigit)) {
    // digits that belong to a scoreline are not counts
    if (t.end < body.size() && (body[t.end] == '-' || body[t.end] == '%')) return std::nullopt;
    if (t.begin > 0 && body[t.begin - 1] == '-') return std::nullopt;
    return std::stoi(t.text);
  }
  return std::nullopt;
}

bool any_word(const std::vector<Token>& t, std::initializer_list<std::string_view> words) {
  return std::any_of(t.begin(), t.end(), [&](const Token& x) {
    return std::find(words.begin(), words.end(), x.text) != words.end();
  });
}

bool has_phrase(const std::vector<Token>& t, std::initializer_list<std::string_view> phrase) {
  const std::vector<std::string_view> p(phrase);
  for (std::size_t i = 0; i + p.size() <= t.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < p.size() && ok; ++k) ok = t[i + k].text == p[k];
    if (ok) return true;
  }
  return false;
}

bool season_sentence(const std::vector<Token>& t) {
  return any_word(t, {"season", "seasons", "campaign", "career"});
}

bool match_cue(const std::vector<Token>& t) {
  return any_word(t, {"already", "tonight", "today"}) || has_phrase(t, {"so", "far"}) ||
         has_phrase(t, {"this", "match"}) || has_phrase(t, {"the", "match"}) ||
         has_phrase(t, {"this", "game"}) || has_phrase(t, {"the", "game"});
}

std::vector<std::string> words_of(std::string_view name) {
  return split_if(ascii_lower(name), [](char c) { return c == ' ' || c == '-'; });
}

struct Names {
  const event::MatchLog* log;

  std::optional<Side> team_word(std::string_view w) const {
    if (log == nullptr) return std::nullopt;
    for (Side s : {Side::home, Side::away}) {
      const auto ws = words_of(log->meta.team_name(s));
      if (!ws.empty() && (ws.back() == w || ws.front() == w)) return s;
    }
    return std::nullopt;
  }

  // Unique rostered player whose name contains the word.
  std::optional<std::string> player_word(std::string_view w) const {
    if (log == nullptr) return std::nullopt;
    std::set<std::string> hits;
    const auto consider = [&](const event::PlayerRef& p) {
      const auto ws = words_of(p.name);
      if (std::find(ws.begin(), ws.end(), w) != ws.end()) hits.insert(p.name);
    };
    for (const auto* l : {&log->home, &log->away})
      for (const auto& p : l->players) consider(p);
    for (const auto& e : log->events) {
      if (e.actor) consider(*e.actor);
      if (e.incoming) consider(*e.incoming);
    }
    if (hits.size() == 1) return *hits.begin();
    return std::nullopt;
  }
};

CountScope possessive_scope(const Token* prev, const ClaimContext& ctx, const Names& names) {
  CountScope scope;
  if (prev == nullptr) return scope;
  const auto& w = prev->text;
  if (w == "their" || w == "its") {
    scope.kind = CountScope::Kind::team;
    scope.side = ctx.team;
  } else if (w == "his" || w == "her") {
    scope.kind = CountScope::Kind::player;
    scope.player = ctx.actor.value_or("");
  } else if (w.size() > 2 && w.ends_with("'s")) {
    const auto base = w.substr(0, w.size() - 2);
    if (auto side = names.team_word(base)) {
      scope.kind = CountScope::Kind::team;
      scope.side = side;
    } else {
      scope.kind = CountScope::Kind::player;
      scope.player = names.player_word(base).value_or("");
    }
  }
  return scope;
}

// Nearest team named before token `i`, else a pronoun that points at the
// acting side or player.
CountScope preceding_scope(const std::vector<Token>& t, std::size_t i, const ClaimContext& ctx,
                           const Names& names) {
  for (std::size_t k = i; k-- > 0;) {
    const auto& w = t[k].text;
    const auto base = w.ends_with("'s") ? w.substr(0, w.size() - 2) : w;
    if (auto side = names.team_word(base)) return {CountScope::Kind::team, side, {}};
    if (w == "they" || w == "their") return {CountScope::Kind::team, ctx.team, {}};
    if (w == "he" || w == "his") return {CountScope::Kind::player, std::nullopt, ctx.actor.value_or("")};
  }
  return {};
}

const std::regex& scoreline_re() {
  static const std::regex re(R"((^|[^0-9\-])([0-9]{1,2}) ?(-|\xE2\x80\x93) ?([0-9]{1,2})(?![0-9\-]))");
  return re;
}

bool score_vocabulary(const std::vector<Token>& t) {
  return any_word(t, {"score", "scoreline", "scores", "lead", "leads", "leading", "led", "trail",
                      "trails", "trailing", "remains", "stands", "level", "ahead", "behind",
                      "deficit", "advantage", "victory", "win", "winning", "losing"});
}

}  // namespace

std::vector<Claim> extract_claims(std::string_view body, const ClaimContext& ctx) {
  std::vector<Claim> out;
  const Names names{ctx.log};
  const auto span = [&](std::size_t b, std::size_t e) { return std::string(body.substr(b, e - b)); };

  for (const auto& sen : sentences(body)) {
    const auto text = body.substr(sen.begin, sen.end - sen.begin);
    const auto tokens = tokenize(text, sen.begin);

    if (score_vocabulary(tokens)) {
      const std::string s(text);
      for (auto it = std::sregex_iterator(s.begin(), s.end(), scoreline_re());
           it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        const auto b = sen.begin + static_cast<std::size_t>(m.position(2));
        const auto e = sen.begin + static_cast<std::size_t>(m.position(4) + m.length(4));
        out.push_back({ClaimKind::scoreline,
                       ScorelinePayload{std::stoi(m.str(2)), std::stoi(m.str(4))}, b, e, span(b, e)});
      }
    }

    if (season_sentence(tokens)) continue;
    const bool cue = match_cue(tokens);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Token* prev = i > 0 ? &tokens[i - 1] : nullptr;
      if (auto o = ordinals().find(tokens[i].text); o != ordinals().end()) {
        if (i + 1 < tokens.size() && (tokens[i + 1].text == "half" || tokens[i + 1].text == "time" ||
                                      tokens[i + 1].text == "minute"))
          continue;
        std::optional<NounHit> noun;
        std::size_t end_tok = i;
        for (std::size_t j = i + 1; j <= i + 3 && j < tokens.size() && !noun; ++j)
          if ((noun = noun_at(tokens, j))) end_tok = j + noun->length - 1;
        if (!noun && i + 3 < tokens.size() && tokens[i + 1].text == "of" && tokens[i + 2].text == "the" &&
            (tokens[i + 3].text == "match" || tokens[i + 3].text == "game")) {
          for (std::size_t k = i; k-- > 0 && !noun;) noun = noun_at(tokens, k);
          end_tok = i + 3;
        }
        if (!noun) continue;
        const std::size_t b = prev && possessive_scope(prev, ctx, names).kind != CountScope::Kind::match
                                  ? prev->begin
                                  : tokens[i].begin;
        const auto e = tokens[end_tok].end;
        out.push_back({ClaimKind::ordinal_event_count,
                       CountPayload{o->second, false, noun->cls, possessive_scope(prev, ctx, names)},
                       b, e, span(b, e)});
        i = end_tok;
        continue;
      }
      if (!cue) continue;
      const auto n = cardinal(tokens[i], body);
      if (!n) continue;
      std::optional<NounHit> noun;
      std::size_t end_tok = i;
      for (std::size_t j = i + 1; j <= i + 2 && j < tokens.size() && !noun; ++j)
        if ((noun = noun_at(tokens, j))) end_tok = j + noun->length - 1;
      if (!noun) continue;
      const auto b = tokens[i].begin, e = tokens[end_tok].end;
      out.push_back({ClaimKind::ordinal_event_count,
                     CountPayload{*n, true, noun->cls, preceding_scope(tokens, i, ctx, names)}, b, e,
                     span(b, e)});
      i = end_tok;
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Claim& a, const Claim& b) { return a.span_begin < b.span_begin; });
  return out;
}

Claim external_stat_claim(std::string dsl, json claimed, std::string span_text) {
  Claim c;
  c.kind = ClaimKind::external_stat;
  c.payload = ExternalStatPayload{std::move(dsl), std::move(claimed)};
  c.span_text = std::move(span_text);
  return c;
}

namespace {

bool class_matches(EventClass c, EventKind k) {
  switch (c) {
    case EventClass::goal: return event::is_goal_kind(k);
    case EventClass::yellow_card: return k == EventKind::yellow_card;
    case EventClass::red_card: return k == EventKind::red_card;
    case EventClass::card: return event::is_card_kind(k);
    case EventClass::corner: return k == EventKind::corner;
    case EventClass::foul: return k == EventKind::foul;
    case EventClass::free_kick: return k == EventKind::free_kick;
    case EventClass::penalty: return k == EventKind::penalty_awarded;
    case EventClass::substitution: return k == EventKind::substitution;
    case EventClass::offside: return k == EventKind::offside;
  }
  return false;
}

Verdict unverifiable(json claimed, std::string note) {
  return {VerdictStatus::unverifiable, nullptr, std::move(claimed), std::move(note)};
}

Verdict verify_count(const CountPayload& c, const event::MatchLog& log, MatchClock clock) {
  if (c.scope.kind == CountScope::Kind::team && !c.scope.side)
    return unverifiable(c.value, "the counted side is unknown");
  if (c.scope.kind == CountScope::Kind::player && c.scope.player.empty())
    return unverifiable(c.value, "the counted player is unknown");
  const auto who = fold_name(c.scope.player);
  long count = 0;
  for (const auto& e : log.events) {
    if (e.clock > clock) continue;
    if (!class_matches(c.event, e.kind)) continue;
    if (c.scope.kind == CountScope::Kind::team) {
      const Side side = event::is_goal_kind(e.kind) ? event::credited_side(e.kind, e.team) : e.team;
      if (side != *c.scope.side) continue;
    } else if (c.scope.kind == CountScope::Kind::player) {
      if (!e.actor || fold_name(e.actor->name) != who) continue;
      if (e.kind == EventKind::own_goal) continue;
    }
    ++count;
  }
  Verdict v{count == c.value ? VerdictStatus::supported : VerdictStatus::contradicted, count, c.value,
            ""};
  return v;
}

Verdict verify_external(const ExternalStatPayload& x, const stats::StatStore* store) {
  if (store == nullptr) return unverifiable(x.claimed, "no statistics store");
  try {
    const auto q = stats::parse_query(x.dsl);
    const auto ans = stats::execute(*store, q);
    const auto got = stats::to_json(ans);
    json expected;
    bool equal = false;
    if (const auto* n = std::get_if<long>(&ans.value)) {
      expected = *n;
      equal = x.claimed.is_number_integer() && x.claimed.get<long>() == *n;
    } else if (const auto* r = std::get_if<stats::TeamRecord>(&ans.value)) {
      expected = got.at("record");
      equal = x.claimed.is_object() && !x.claimed.empty();
      for (auto it = x.claimed.begin(); equal && it != x.claimed.end(); ++it)
        equal = expected.contains(it.key()) && expected[it.key()] == it.value();
      (void)r;
    } else {
      const auto& list = std::get<std::vector<stats::MatchSummary>>(ans.value);
      expected = static_cast<long>(list.size());
      equal = x.claimed.is_number_integer() && x.claimed.get<long>() == static_cast<long>(list.size());
    }
    return {equal ? VerdictStatus::supported : VerdictStatus::contradicted, expected, x.claimed, ""};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnsupportedStat)
      return unverifiable(x.claimed, "statistic is not in the schema");
    return unverifiable(x.claimed, std::string(error_kind_name(e.kind())) + ": " + e.what());
  }
}

}  // namespace

std::vector<Verdict> verify_claims(std::span<const Claim> claims, const event::MatchLog& log,
                                   MatchClock clock, const stats::StatStore* store,
                                   const VerifyOptions& options) {
  std::optional<event::GameState> state;
  std::string replay_error;
  try {
    state = event::replay(log, clock, {event::kDefaultHistoryK, true});
  } catch (const Error& e) {
    replay_error = e.what();
  }
  std::vector<Verdict> out;
  for (const auto& c : claims) {
    if (const auto* s = std::get_if<ScorelinePayload>(&c.payload)) {
      const json claimed = {s->first, s->second};
      if (!state) {
        out.push_back(unverifiable(claimed, "log does not replay: " + replay_error));
        continue;
      }
      const json expected = {state->score_home, state->score_away};
      if (s->first == state->score_home && s->second == state->score_away)
        out.push_back({VerdictStatus::supported, expected, claimed, "home-away"});
      else if (s->first == state->score_away && s->second == state->score_home && !options.strict_scoreline)
        out.push_back({VerdictStatus::supported, expected, claimed, "away-home"});
      else
        out.push_back({VerdictStatus::contradicted, expected, claimed, ""});
    } else if (const auto* n = std::get_if<CountPayload>(&c.payload)) {
      out.push_back(verify_count(*n, log, clock));
    } else {
      out.push_back(verify_external(std::get<ExternalStatPayload>(c.payload), store));
    }
  }
  return out;
}

bool is_goal_claim(const Claim& c) {
  if (c.kind == ClaimKind::scoreline) return true;
  if (const auto* n = std::get_if<CountPayload>(&c.payload)) return n->event == EventClass::goal;
  if (const auto* x = std::get_if<ExternalStatPayload>(&c.payload)) {
    try {
      const auto q = stats::parse_query(x->dsl);
      return q.stat && *q.stat == stats::Stat::goals;
    } catch (const Error&) {
      return false;
    }
  }
  return false;
}

std::optional<double> VerdictTally::accuracy() const {
  if (total() == 0) return std::nullopt;
  return 100.0 * static_cast<double>(supported) / static_cast<double>(total());
}

VerificationSummary summarize(std::span<const Claim> claims, std::span<const Verdict> verdicts) {
  if (claims.size() != verdicts.size())
    fail(ErrorKind::LengthMismatch, "claims and verdicts differ in count");
  VerificationSummary s;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    auto& t = is_goal_claim(claims[i]) ? s.icl_goal : s.icl_other;
    switch (verdicts[i].status) {
      case VerdictStatus::supported: ++t.supported; break;
      case VerdictStatus::contradicted: ++t.contradicted; break;
      case VerdictStatus::unverifiable: ++t.unverifiable; break;
    }
  }
  return s;
}

json to_json(const Claim& c) {
  json j = {{"kind", to_string(c.kind)}, {"span", c.span_text}};
  if (const auto* s = std::get_if<ScorelinePayload>(&c.payload)) {
    j["score"] = {s->first, s->second};
  } else if (const auto* n = std::get_if<CountPayload>(&c.payload)) {
    j["value"] = n->value;
    j["form"] = n->cardinal ? "cardinal" : "ordinal";
    j["event"] = to_string(n->event);
    switch (n->scope.kind) {
      case CountScope::Kind::match: j["scope"] = "match"; break;
      case CountScope::Kind::team:
        j["scope"] = n->scope.side ? json(event::to_string(*n->scope.side)) : json("team?");
        break;
      case CountScope::Kind::player: j["scope"] = {{"player", n->scope.player}}; break;
    }
  } else {
    const auto& x = std::get<ExternalStatPayload>(c.payload);
    j["dsl"] = x.dsl;
    j["claimed"] = x.claimed;
  }
  return j;
}

json to_json(const Verdict& v) {
  return {{"status", to_string(v.status)}, {"expected", v.expected}, {"claimed", v.claimed}, {"note", v.note}};
}

namespace {

json tally_json(const VerdictTally& t) {
  json j = {{"supported", t.supported}, {"contradicted", t.contradicted}, {"unverifiable", t.unverifiable}};
  const auto a = t.accuracy();
  j["accuracy"] = a ? json(*a) : json(nullptr);
  return j;
}

}  // namespace

json to_json(const VerificationSummary& s) {
  return {{"icl_goal", tally_json(s.icl_goal)}, {"icl_other", tally_json(s.icl_other)}};
}

}  // namespace pitchside::eval
