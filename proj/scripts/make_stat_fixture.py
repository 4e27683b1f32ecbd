#!/usr/bin/env python3
"""Writes the synthetic statistics store under fixtures/stats/.

Output is fully determined by SEED. Team, league and season names are real so
that the shipped question set reads naturally, but every result, event and
player attribute is synthetic.
"""

import argparse
import csv
import datetime as dt
import pathlib
import random

SEED = 20161122

COMPETITIONS = [
    # league, season, first matchday, days between rounds, teams
    ("Premier League", "2015-2016", dt.datetime(2015, 8, 8, 14, 0), 7,
     ["Arsenal", "Chelsea", "Manchester City", "Liverpool", "West Brom", "West Ham",
      "Southampton", "Norwich"]),
    ("Premier League", "2016-2017", dt.datetime(2016, 8, 13, 14, 0), 7,
     ["Arsenal", "Chelsea", "Manchester City", "Liverpool", "West Ham", "Southampton"]),
    ("UEFA Champions League", "2014-2015", dt.datetime(2014, 9, 16, 19, 45), 14,
     ["Real Madrid", "FC Porto", "Barcelona", "Bayern Munich", "Paris SG", "Juventus"]),
    ("UEFA Champions League", "2015-2016", dt.datetime(2015, 9, 15, 19, 45), 14,
     ["Real Madrid", "Bayern Munich", "Manchester City", "Chelsea", "Paris SG", "Arsenal"]),
    ("UEFA Champions League", "2016-2017", dt.datetime(2016, 9, 13, 19, 45), 14,
     ["Paris SG", "Arsenal", "Barcelona", "Real Madrid", "Napoli", "Atl. Madrid",
      "Bayern Munich"]),
    ("Bundesliga", "2015-2016", dt.datetime(2015, 8, 14, 18, 30), 7,
     ["Bayern Munich", "Dortmund", "FC Koln", "Schalke", "Leverkusen"]),
    ("La Liga", "2014-2015", dt.datetime(2014, 8, 23, 20, 0), 10,
     ["Barcelona", "Real Madrid", "Atl. Madrid", "Malaga", "Sevilla"]),
    ("La Liga", "2016-2017", dt.datetime(2016, 8, 20, 20, 0), 10,
     ["Barcelona", "Real Madrid", "Atl. Madrid", "Malaga"]),
]

# Named players get extra weight as event actors so the question set has
# non-trivial answers.
STARS = {
    "Arsenal": ["Alexis Sanchez", "Mesut Ozil"],
    "Chelsea": ["Cesc Fabregas", "Kurt Zouma", "Gary Cahill", "Willian", "Ramires"],
    "Manchester City": ["Sergio Aguero", "Jesus Navas"],
    "Liverpool": ["Jordan Henderson", "Dejan Lovren"],
    "Real Madrid": ["Cristiano Ronaldo", "Toni Kroos", "Daniel Carvajal", "Danilo"],
    "Barcelona": ["Lionel Messi", "Neymar"],
    "Paris SG": ["Marco Verratti", "Edinson Cavani", "Lucas Moura"],
    "Schalke": ["Leon Goretzka"],
    "Bayern Munich": ["Franck Ribery", "Arjen Robben"],
    "Dortmund": ["Pierre-Emerick Aubameyang", "Matthias Ginter"],
    "Sevilla": ["Grzegorz Krychowiak"],
}

NATIONALITIES = ["Chile", "Portugal", "Argentina", "Spain", "Italy", "Germany", "England",
                 "Croatia", "France", "Brazil", "Netherlands", "Gabon", "Poland", "Belgium"]

ROSTER_SIZE = 14


def roster(team):
    stars = STARS.get(team, [])
    filler = [f"{team} Player {n}" for n in range(1, ROSTER_SIZE - len(stars) + 1)]
    return stars + filler


def pick_player(rng, team):
    players = roster(team)
    stars = STARS.get(team, [])
    weights = [4 if p in stars else 1 for p in players]
    return rng.choices(players, weights=weights, k=1)[0]


def double_round_robin(teams):
    """Circle method; returns a list of rounds, each a list of (home, away)."""
    names = list(teams)
    if len(names) % 2:
        names.append(None)
    n = len(names)
    rounds = []
    for r in range(n - 1):
        pairs = []
        for i in range(n // 2):
            a, b = names[i], names[n - 1 - i]
            if a is not None and b is not None:
                pairs.append((a, b) if r % 2 == 0 else (b, a))
        rounds.append(pairs)
        names = [names[0]] + [names[-1]] + names[1:-1]
    return rounds + [[(b, a) for a, b in rnd] for rnd in rounds]


def clock(rng):
    half = rng.choice([1, 2])
    secs = rng.randrange(0, 45 * 60)
    return half, secs


def fmt_clock(c):
    half, secs = c
    return f"{half} - {secs // 60:02d}:{secs % 60:02d}"


def generate(rng):
    matches = []
    events = []
    for league, season, start, gap, teams in COMPETITIONS:
        for rnd_idx, rnd in enumerate(double_round_robin(teams)):
            day = start + dt.timedelta(days=gap * rnd_idx)
            for slot, (home, away) in enumerate(rnd):
                kickoff = day + dt.timedelta(hours=2 * slot)
                mid = f"{league[:3].upper().replace(' ', '')}{season[2:4]}{season[7:9]}-" \
                      f"{rnd_idx + 1:02d}{slot + 1}"
                hg = min(rng.choices(range(6), weights=[22, 33, 25, 12, 6, 2])[0], 5)
                ag = min(rng.choices(range(6), weights=[30, 35, 21, 9, 4, 1])[0], 5)
                matches.append((mid, home, away, league, season, kickoff, hg, ag))
                events.extend(match_events(rng, mid, home, away, hg, ag))
    # One fixture dated exactly at a query boundary; excluded by strict BEFORE.
    boundary = dt.datetime(2016, 11, 22, 0, 0)
    matches.append(("UEF1617-BND1", "Paris SG", "Arsenal", "UEFA Champions League",
                    "2016-2017", boundary, 1, 1))
    events.extend(match_events(rng, "UEF1617-BND1", "Paris SG", "Arsenal", 1, 1))
    return matches, events


def match_events(rng, mid, home, away, hg, ag):
    out = []
    for team, opp, goals in ((home, away, hg), (away, home, ag)):
        for _ in range(goals):
            c = clock(rng)
            method = rng.choices(["open_play", "header", "penalty", "own_goal"],
                                 weights=[64, 16, 12, 8])[0]
            if method == "own_goal":
                out.append((mid, c, "goal", team, pick_player(rng, opp), "own_goal"))
                continue
            scorer = pick_player(rng, team)
            if method == "penalty":
                out.append((mid, (c[0], max(c[1] - 60, 0)), "penalty_awarded", team, "", ""))
            out.append((mid, c, "goal", team, scorer, method))
            if method != "penalty" and rng.random() < 0.7:
                helper = pick_player(rng, team)
                if helper != scorer:
                    out.append((mid, c, "assist", team, helper, ""))
        if rng.random() < 0.1:
            # a penalty that was missed or saved
            out.append((mid, clock(rng), "penalty_awarded", team, "", ""))
        for _ in range(rng.randrange(0, 4)):
            out.append((mid, clock(rng), "yellow_card", team, pick_player(rng, team), ""))
        if rng.random() < 0.08:
            out.append((mid, clock(rng), "red_card", team, pick_player(rng, team), ""))
        for _ in range(rng.randrange(5, 15)):
            out.append((mid, clock(rng), "foul", team, pick_player(rng, team), ""))
        for _ in range(rng.randrange(1, 10)):
            out.append((mid, clock(rng), "corner", team, "", ""))
        for _ in range(rng.randrange(5, 14)):
            taker = pick_player(rng, team) if rng.random() < 0.5 else ""
            out.append((mid, clock(rng), "free_kick", team, taker, ""))
    out.sort(key=lambda e: e[1])
    return out


def players_table(rng):
    names = []
    seen = set()
    for *_, teams in COMPETITIONS:
        for team in teams:
            for p in roster(team):
                if p not in seen:
                    seen.add(p)
                    names.append(p)
    rows = []
    for name in names:
        born = dt.date(1984, 1, 1) + dt.timedelta(days=rng.randrange(0, 12 * 365))
        rows.append((name, rng.choice(NATIONALITIES), rng.randrange(165, 198), born.isoformat()))
    # Two distinct people share this name; lookups must ask for disambiguation.
    rows.append(("Danilo", "Brazil", 184, "1996-05-28"))
    return rows


def write(out_dir):
    rng = random.Random(SEED)
    matches, events = generate(rng)
    players = players_table(rng)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "matches.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["match_id", "home", "away", "league", "season", "kickoff", "final_score"])
        for mid, home, away, league, season, kickoff, hg, ag in matches:
            w.writerow([mid, home, away, league, season,
                        kickoff.strftime("%Y-%m-%dT%H:%M:%SZ"), f"{hg}-{ag}"])
    with open(out_dir / "stat_events.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["match_id", "clock", "kind", "team", "player", "method"])
        for mid, c, kind, team, player, method in events:
            w.writerow([mid, fmt_clock(c), kind, team, player, method])
    with open(out_dir / "players.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["name", "nationality", "height_cm", "birthdate"])
        w.writerows(players)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    root = pathlib.Path(__file__).resolve().parent.parent
    ap.add_argument("--out", type=pathlib.Path, default=root / "fixtures" / "stats")
    args = ap.parse_args()
    write(args.out)


if __name__ == "__main__":
    main()
