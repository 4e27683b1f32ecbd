#!/usr/bin/env python3
"""Writes the evaluation fixtures under fixtures/eval/.

reference_cases/<case>/ holds a match log and a commentary.jsonl whose lines carry
the commentary clock, acting side and player, any external-statistic
annotations, and the expected verdict for every claim. The commentary is
written fresh for these fixtures; only the checked facts (scorelines, counts,
event order) follow the reference good and bad cases. Squads are filled with
placeholder names around the players the commentary mentions.

structure/NN.json holds a numbered label list and the facet shares computed
exactly with fractions.
"""

import argparse
import fractions
import json
import pathlib
import random

SEED = 4242

POSITIONS = ["goalkeeper"] + ["defender"] * 4 + ["midfielder"] * 3 + ["forward"] * 3


def squad(team, named):
    """Eleven players; `named` maps shirt number to a real-sounding name."""
    out = []
    for n in range(1, 12):
        out.append({"name": named.get(n, f"{team} Player {n}"), "number": n,
                    "position": POSITIONS[n - 1]})
    return out


def ev(half, minute, kind, team, actor=None, **extra):
    e = {"half": half, "offset_s": minute * 60, "kind": kind, "team": team}
    if actor is not None:
        e["actor"] = actor
    e.update(extra)
    return e


def log(home, away, league, season, kickoff, colors, home_named, away_named, events):
    return {
        "meta": {"home": home, "away": away, "league": league, "season": season,
                 "kickoff": kickoff, "home_color": colors[0], "away_color": colors[1]},
        "lineups": {"home": squad(home, home_named), "away": squad(away, away_named),
                    "home_coach": f"{home} Coach", "away_coach": f"{away} Coach"},
        "events": events,
    }


def line(half, minute, team, actor, body, expected, annotations=None):
    out = {"half": half, "offset_s": minute * 60, "team": team, "actor": actor, "body": body,
           "expected": [{"span": s, "status": st} for s, st in expected]}
    if annotations:
        out["annotations"] = annotations
    return out


CASES = {
    "good_1": (
        log("Arsenal", "Paris SG", "UEFA Champions League", "2016-2017",
            "2016-11-23T19:45:00Z", ("red", "dark-blue"), {9: "Olivier Giroud", 10: "Alexis Sanchez"},
            {9: "Edinson Cavani"},
            [ev(1, 10, "goal", "home", "Olivier Giroud"),
             ev(1, 30, "goal", "away", "Edinson Cavani"),
             ev(2, 2, "goal", "home", "Alexis Sanchez"),
             ev(2, 7, "offside", "away", "Edinson Cavani")]),
        [line(2, 7, "away", "Edinson Cavani",
              "Cavani drifts beyond the last defender too early and the flag goes up. "
              "He had pulled one back in the first half, and the visitors trail 2-1 as the clock "
              "runs down. He has already found the net twice in this Champions League season.",
              [("2-1", "supported")])]),
    "good_2": (
        log("Paris SG", "Basel", "UEFA Champions League", "2016-2017", "2016-10-19T18:45:00Z",
            ("dark-blue", "red"), {7: "Lucas Moura"}, {},
            [ev(1, 20, "goal", "home", "Paris SG Player 9"),
             ev(1, 40, "goal", "away", "Basel Player 9"),
             ev(2, 10, "free_kick", "home", "Lucas Moura")]),
        [line(2, 10, "home", "Lucas Moura",
              "Lucas Moura bends the free kick over the wall, but the keeper palms it away. "
              "The score remains 1-1. He already has three goals this season.",
              [("1-1", "supported")])]),
    "good_3": (
        log("Norwich", "Chelsea", "Premier League", "2015-2016", "2015-11-21T15:00:00Z",
            ("yellow", "blue"), {}, {10: "Willian"},
            [ev(1, 12, "goal", "away", "Chelsea Player 9"),
             ev(1, 20, "corner", "away"),
             ev(1, 35, "goal", "home", "Norwich Player 9"),
             ev(2, 5, "corner", "away"),
             ev(2, 15, "goal", "away", "Chelsea Player 11"),
             ev(2, 30, "corner", "away", "Willian")]),
        [line(2, 30, "away", "Willian",
              "Chelsea earn their third corner of the match and Willian jogs over to take it. "
              "The score stands at 2-1 in favour of the visitors.",
              [("their third corner", "supported"), ("2-1", "supported")])]),
    "good_4": (
        log("Manchester City", "Sevilla", "UEFA Champions League", "2015-2016",
            "2015-10-21T18:45:00Z", ("sky-blue", "white"), {}, {6: "Steven N'Zonzi"},
            [ev(1, 8, "goal", "home", "Manchester City Player 9"),
             ev(1, 25, "goal", "away", "Sevilla Player 9"),
             ev(1, 38, "goal", "home", "Manchester City Player 10"),
             ev(2, 14, "goal", "home", "Manchester City Player 11"),
             ev(2, 30, "foul", "away", "Steven N'Zonzi")]),
        [line(2, 30, "away", "Steven N'Zonzi",
              "N'Zonzi clips his man in the centre circle and concedes a free kick, with Sevilla "
              "trailing 1-3.",
              [("1-3", "supported")])]),
    "good_5": (
        log("Chelsea", "Southampton", "Premier League", "2015-2016", "2015-10-03T14:00:00Z",
            ("blue", "red"), {10: "Willian"}, {},
            [ev(1, 30, "goal", "home", "Chelsea Player 9"),
             ev(1, 40, "yellow_card", "away", "Southampton Player 4"),
             ev(2, 10, "yellow_card", "away", "Southampton Player 6"),
             ev(2, 20, "corner", "home", "Willian")]),
        [line(2, 20, "home", "Willian",
              "Chelsea leads 1-0 as Willian wins a corner down the right. Meanwhile, Southampton "
              "has already received two yellow cards in this match.",
              [("1-0", "supported"), ("two yellow cards", "supported")])]),
    "good_6": (
        log("Dortmund", "Bayern Munich", "Bundesliga", "2015-2016", "2015-10-04T15:30:00Z",
            ("yellow", "red"), {3: "Marc Bartra", 9: "Adrian Ramos"}, {7: "Franck Ribery"},
            [ev(1, 18, "yellow_card", "home", "Adrian Ramos"),
             ev(1, 33, "goal", "home", "Dortmund Player 10"),
             ev(2, 4, "yellow_card", "home", "Marc Bartra"),
             ev(2, 25, "yellow_card", "away", "Franck Ribery")]),
        [line(2, 25, "away", "Franck Ribery",
              "Ribery is booked for a late lunge, the third yellow card of the match after Ramos "
              "and Bartra went into the book earlier.",
              [("third yellow card", "supported")])]),
    "good_7": (
        log("Real Madrid", "Malaga", "La Liga", "2014-2015", "2014-11-29T20:00:00Z",
            ("white", "sky-blue"), {}, {9: "Juanmi"},
            [ev(1, 20, "goal", "home", "Real Madrid Player 9"),
             ev(1, 44, "goal", "home", "Real Madrid Player 7"),
             ev(2, 25, "header_goal", "away", "Juanmi")]),
        [line(2, 25, "away", "Juanmi",
              "Juanmi rises above everyone and nods it in to give Malaga hope. The score now "
              "stands at 2-1.",
              [("2-1", "supported")])]),
    "bad_1": (
        log("Leverkusen", "Schalke", "Bundesliga", "2015-2016", "2015-11-08T16:30:00Z",
            ("red", "blue"), {7: "Kevin Kampl"}, {},
            [ev(1, 22, "goal", "home", "Leverkusen Player 9"),
             ev(1, 30, "yellow_card", "home", "Leverkusen Player 4"),
             ev(1, 41, "yellow_card", "home", "Leverkusen Player 5"),
             ev(2, 12, "yellow_card", "home", "Leverkusen Player 3"),
             ev(2, 30, "yellow_card", "home", "Kevin Kampl")]),
        [line(2, 30, "home", "Kevin Kampl",
              "Kampl is shown a card for dissent, with Leverkusen already having three yellow "
              "cards to their name. The score remains 1-0.",
              [("three yellow cards", "contradicted"), ("1-0", "supported")])]),
    "bad_2": (
        log("Real Madrid", "Napoli", "UEFA Champions League", "2016-2017",
            "2017-02-15T19:45:00Z", ("white", "sky-blue"), {}, {},
            [ev(1, 8, "goal", "away", "Napoli Player 9"),
             ev(1, 18, "goal", "home", "Real Madrid Player 9"),
             ev(1, 29, "goal", "home", "Real Madrid Player 8"),
             ev(2, 9, "goal", "home", "Real Madrid Player 6"),
             ev(2, 33, "goal", "home", "Real Madrid Player 7"),
             ev(2, 35, "corner", "home")]),
        [line(2, 35, "home", None,
              "Real Madrid have enjoyed 62% of the ball tonight and lead 4-1.",
              [("62% of the ball", "unverifiable"), ("4-1", "supported")],
              [{"dsl": 'COUNT possession TEAM "Real Madrid" SEASON "2016-2017" '
                       'BEFORE 2017-02-15T19:45:00Z',
                "claimed": 62, "span": "62% of the ball"}])]),
    "bad_3": (
        log("Bayern Munich", "Arsenal", "UEFA Champions League", "2016-2017",
            "2017-02-15T19:45:00Z", ("red", "yellow"), {}, {},
            [ev(1, 5, "corner", "home"),
             ev(1, 11, "goal", "home", "Bayern Munich Player 9"),
             ev(1, 19, "corner", "home"),
             ev(1, 27, "corner", "away"),
             ev(1, 36, "corner", "home"),
             ev(2, 3, "corner", "home"),
             ev(2, 12, "corner", "home"),
             ev(2, 21, "corner", "home", "Bayern Munich Player 7")]),
        [line(2, 21, "home", "Bayern Munich Player 7",
              "Bayern Munich win another corner, their fifth of the match so far.",
              [("their fifth of the match", "contradicted")])]),
    "bad_4": (
        log("Barcelona", "Paris SG", "UEFA Champions League", "2016-2017",
            "2017-03-08T19:45:00Z", ("dark-red", "dark-blue"),
            {9: "Luis Suarez", 10: "Lionel Messi", 11: "Neymar"}, {3: "Layvin Kurzawa",
                                                                   9: "Edinson Cavani"},
            [ev(1, 3, "goal", "home", "Luis Suarez"),
             ev(1, 40, "own_goal", "away", "Layvin Kurzawa"),
             ev(2, 5, "penalty_goal", "home", "Lionel Messi"),
             ev(2, 17, "goal", "away", "Edinson Cavani"),
             ev(2, 43, "goal", "home", "Neymar"),
             ev(2, 44, "penalty_goal", "home", "Neymar")]),
        [line(2, 44, "home", "Neymar",
              "Neymar sends the keeper the wrong way from the spot to extend their lead to 4-1. "
              "That is Neymar's second goal of the match!",
              [("4-1", "contradicted"), ("Neymar's second goal", "supported")])]),
}


def structure_cases(rng):
    names = {"D": "Description", "E": "Explanation", "C": "Commentary"}
    combos = [["D"], ["E"], ["C"], ["D", "E"], ["D", "C"], ["E", "C"], ["D", "E", "C"]]
    out = [[["D"], ["C"], ["D", "E"]]]
    while len(out) < 20:
        n = rng.randint(1, 9)
        out.append([rng.choice(combos) for _ in range(n)])
    cases = []
    for labels in out:
        share = {"D": fractions.Fraction(0), "E": fractions.Fraction(0), "C": fractions.Fraction(0)}
        for s in labels:
            for f in s:
                share[f] += fractions.Fraction(1, len(s))
        n = len(labels)
        pct = {k: float(v * 100 / n) for k, v in share.items()}
        text = " ".join(f"{i + 1}.{' and '.join(names[f] for f in s)}"
                        for i, s in enumerate(labels))
        cases.append({"labels": text,
                      "expected": {"sentences": n, "description": pct["D"],
                                   "explanation": pct["E"], "comment": pct["C"],
                                   "low_description": share["D"] * 2 < n}})
    return cases


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent
                                         / "fixtures" / "eval"))
    args = ap.parse_args()
    root = pathlib.Path(args.out)
    for case, (match, lines) in CASES.items():
        d = root / "reference_cases" / case
        d.mkdir(parents=True, exist_ok=True)
        (d / "log.json").write_text(json.dumps(match, indent=2, sort_keys=True) + "\n")
        with (d / "commentary.jsonl").open("w") as f:
            for entry in lines:
                f.write(json.dumps(entry, sort_keys=True) + "\n")
    sd = root / "structure"
    sd.mkdir(parents=True, exist_ok=True)
    for i, c in enumerate(structure_cases(random.Random(SEED))):
        (sd / f"{i:02d}.json").write_text(json.dumps(c, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
