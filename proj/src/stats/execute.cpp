#include "pitchside/stats/execute.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pitchside/common/error.hpp"
#include "pitchside/common/text.hpp"

namespace pitchside::stats {

using nlohmann::json;

namespace {

bool stat_matches(Stat s, EventType t) {
  switch (s) {
    case Stat::goals: return t == EventType::goal;
    case Stat::assists: return t == EventType::assist;
    case Stat::yellow_cards: return t == EventType::yellow_card;
    case Stat::red_cards: return t == EventType::red_card;
    case Stat::cards_any: return t == EventType::yellow_card || t == EventType::red_card;
    case Stat::fouls: return t == EventType::foul;
    case Stat::corners: return t == EventType::corner;
    case Stat::penalties_awarded: return t == EventType::penalty_awarded;
    case Stat::free_kicks: return t == EventType::free_kick;
    case Stat::unsupported: return false;
  }
  return false;
}

bool method_matches(const StatQuery& q, const StatEvent& e) {
  if (e.type != EventType::goal) return true;
  const auto m = e.method.value_or(GoalMethod::open_play);
  if (!q.method) return q.subject_kind == Subject::team || m != GoalMethod::own_goal;
  switch (*q.method) {
    case MethodFilter::any: return true;
    case MethodFilter::open_play: return m == GoalMethod::open_play;
    case MethodFilter::penalty: return m == GoalMethod::penalty;
    case MethodFilter::header: return m == GoalMethod::header;
    case MethodFilter::own_goal: return m == GoalMethod::own_goal;
  }
  return false;
}

struct Context {
  const StatStore& store;
  const StatQuery& q;
  std::string subject;  // folded

  bool visible(const MatchRecord& m) const { return m.kickoff < q.as_of; }

  bool filtered(const MatchRecord& m) const {
    if (!visible(m)) return false;
    if (q.season && m.season != *q.season) return false;
    if (q.league && fold_name(m.league) != fold_name(*q.league)) return false;
    return true;
  }

  // Team participation, honouring VENUE.
  bool team_plays(const MatchRecord& m) const {
    const bool home = fold_name(m.home) == subject;
    const bool away = fold_name(m.away) == subject;
    if (q.venue) return *q.venue == Venue::home ? home : away;
    return home || away;
  }

  void require_known() const {
    bool any_visible = false;
    for (const auto& m : store.matches()) {
      if (!visible(m)) continue;
      any_visible = true;
      if (q.subject_kind == Subject::team &&
          (fold_name(m.home) == subject || fold_name(m.away) == subject))
        return;
    }
    if (!any_visible) return;
    if (q.subject_kind == Subject::player) {
      for (const auto& p : store.players())
        if (fold_name(p.name) == subject) return;
      std::set<std::string> visible_ids;
      for (const auto& m : store.matches())
        if (visible(m)) visible_ids.insert(m.match_id);
      for (const auto& e : store.events())
        if (!e.player.empty() && visible_ids.contains(e.match_id) && fold_name(e.player) == subject)
          return;
    }
    fail(ErrorKind::UnknownEntity, (q.subject_kind == Subject::team ? "team '" : "player '") +
                                       q.subject + "' does not appear in the store");
  }
};

bool before(const MatchRecord* a, const MatchRecord* b) {
  return std::tie(a->kickoff, a->match_id) < std::tie(b->kickoff, b->match_id);
}

MatchSummary summarize(const MatchRecord& m) {
  return {m.match_id, m.kickoff, m.home, m.away, m.home_goals, m.away_goals};
}

}  // namespace

StatAnswer execute(const StatStore& store, const StatQuery& q) {
  if (q.verb == Verb::count && (!q.stat || *q.stat == Stat::unsupported))
    fail(ErrorKind::UnsupportedStat,
         "statistic '" + (q.unsupported_stat.empty() ? std::string("?") : q.unsupported_stat) +
             "' is not in the schema");
  if (q.verb != Verb::count && q.subject_kind != Subject::team)
    fail(ErrorKind::InvalidInput, "match listings take a team subject");

  const Context ctx{store, q, fold_name(q.subject)};
  ctx.require_known();

  StatAnswer ans;
  if (q.verb == Verb::count) {
    std::map<std::string, const MatchRecord*> eligible;
    for (const auto& m : store.matches()) {
      if (!ctx.filtered(m)) continue;
      if (q.subject_kind == Subject::team && !ctx.team_plays(m)) continue;
      eligible.emplace(m.match_id, &m);
    }
    const std::string for_team = q.for_team ? fold_name(*q.for_team) : std::string();
    std::map<std::string, long> per_match;
    long total = 0;
    for (const auto& e : store.events()) {
      if (!eligible.contains(e.match_id)) continue;
      if (!stat_matches(*q.stat, e.type) || !method_matches(q, e)) continue;
      if (q.subject_kind == Subject::team) {
        if (fold_name(e.team) != ctx.subject) continue;
      } else {
        if (e.player.empty() || fold_name(e.player) != ctx.subject) continue;
        if (q.for_team && fold_name(e.team) != for_team) continue;
      }
      ++per_match[e.match_id];
      ++total;
    }
    ans.value = total;
    std::vector<const MatchRecord*> used;
    for (const auto& [id, _] : per_match) used.push_back(eligible.at(id));
    std::sort(used.begin(), used.end(), before);
    for (const auto* m : used) ans.provenance.push_back({m->match_id, m->kickoff, per_match[m->match_id]});
    return ans;
  }

  std::vector<const MatchRecord*> played;
  for (const auto& m : store.matches())
    if (ctx.filtered(m) && ctx.team_plays(m)) played.push_back(&m);
  std::sort(played.begin(), played.end(), before);

  if (q.verb == Verb::last_n_results) {
    const auto n = static_cast<std::size_t>(std::max(q.n.value_or(1), 1));
    if (played.size() > n) played.erase(played.begin(), played.end() - static_cast<long>(n));
  }
  for (const auto* m : played) ans.provenance.push_back({m->match_id, m->kickoff, 1});

  if (q.verb == Verb::team_record) {
    TeamRecord r;
    for (const auto* m : played) {
      const bool home = fold_name(m->home) == ctx.subject;
      const int gf = home ? m->home_goals : m->away_goals;
      const int ga = home ? m->away_goals : m->home_goals;
      r.goals_for += gf;
      r.goals_against += ga;
      if (gf > ga) ++r.wins;
      else if (gf == ga) ++r.draws;
      else ++r.losses;
    }
    ans.value = r;
    return ans;
  }

  std::vector<MatchSummary> list;
  for (const auto* m : played) list.push_back(summarize(*m));
  if (q.verb == Verb::last_n_results) std::reverse(list.begin(), list.end());
  ans.value = std::move(list);
  return ans;
}

AnswerValidation validate_answers(const std::vector<AnsweredQuery>& answers,
                                  DateTime match_kickoff) {
  AnswerValidation out;
  std::vector<std::pair<std::string, const StatAnswer*>> seen;
  for (const auto& a : answers) {
    const bool future = std::any_of(a.answer.provenance.begin(), a.answer.provenance.end(),
                                    [&](const Provenance& p) { return p.kickoff >= match_kickoff; });
    const auto printed = print_query(a.query);
    const bool repeat = std::any_of(seen.begin(), seen.end(), [&](const auto& s) {
      return s.first == printed && *s.second == a.answer;
    });
    if (future || repeat) {
      out.discarded.push_back(a);
      continue;
    }
    seen.emplace_back(printed, &a.answer);
    out.kept.push_back(a);
  }
  return out;
}

namespace {

std::string score_line(const MatchSummary& m) {
  return format_iso8601(m.kickoff) + " " + m.home + " " + std::to_string(m.home_goals) + "-" +
         std::to_string(m.away_goals) + " " + m.away;
}

}  // namespace

std::string render_answer(const AnsweredQuery& a) {
  std::string out = print_query(a.query) + " => ";
  if (const auto* c = std::get_if<long>(&a.answer.value)) {
    out += std::to_string(*c);
  } else if (const auto* r = std::get_if<TeamRecord>(&a.answer.value)) {
    out += std::to_string(r->wins) + " wins, " + std::to_string(r->draws) + " draws, " +
           std::to_string(r->losses) + " losses (goals " + std::to_string(r->goals_for) + "-" +
           std::to_string(r->goals_against) + ")";
  } else {
    const auto& list = std::get<std::vector<MatchSummary>>(a.answer.value);
    if (list.empty()) out += "no matches";
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i) out += "; ";
      out += score_line(list[i]);
    }
  }
  return out;
}

json to_json(const StatAnswer& a) {
  json out;
  if (const auto* c = std::get_if<long>(&a.value)) {
    out["type"] = "count";
    out["count"] = *c;
  } else if (const auto* r = std::get_if<TeamRecord>(&a.value)) {
    out["type"] = "record";
    out["record"] = {{"wins", r->wins},           {"draws", r->draws},
                     {"losses", r->losses},       {"played", r->played()},
                     {"goals_for", r->goals_for}, {"goals_against", r->goals_against}};
  } else {
    out["type"] = "matches";
    json list = json::array();
    for (const auto& m : std::get<std::vector<MatchSummary>>(a.value))
      list.push_back({{"match_id", m.match_id},
                      {"kickoff", format_iso8601_full(m.kickoff)},
                      {"home", m.home},
                      {"away", m.away},
                      {"score", std::to_string(m.home_goals) + "-" + std::to_string(m.away_goals)}});
    out["matches"] = std::move(list);
  }
  json prov = json::array();
  for (const auto& p : a.provenance)
    prov.push_back({{"match_id", p.match_id},
                    {"kickoff", format_iso8601_full(p.kickoff)},
                    {"contribution", p.contribution}});
  out["provenance"] = std::move(prov);
  return out;
}

json to_json(const PlayerBio& p) {
  return {{"name", p.name},
          {"nationality", p.nationality},
          {"height_cm", p.height_cm},
          {"birthdate", p.birthdate}};
}

}  // namespace pitchside::stats
