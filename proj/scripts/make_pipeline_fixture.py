#!/usr/bin/env python3
"""Writes the ten-segment pipeline fixture under fixtures/pipeline/.

Outputs: log.json (Paris SG v Arsenal), segments.json (bundles), scenes/,
attention/, and gold.json, which scripts/fixture_responder.py serves to
produce recorded.json. Player and team names line up with fixtures/stats so
the external-knowledge questions have answers.
"""

import argparse
import json
import pathlib
import random

SEED = 20161206
KICKOFF = "2016-12-06T19:45:00Z"
HOME, AWAY = "Paris SG", "Arsenal"
SEASON_CLAUSE = 'SEASON 2016-2017 LEAGUE "UEFA Champions League"'
BEFORE = f"BEFORE {KICKOFF}"


def p(name, number, position):
    return {"name": name, "number": number, "position": position}


HOME_XI = [p("Alphonse Areola", 16, "goalkeeper"), p("Thomas Meunier", 12, "defender"),
           p("Thiago Silva", 2, "defender"), p("Presnel Kimpembe", 3, "defender"),
           p("Layvin Kurzawa", 20, "defender"), p("Marco Verratti", 6, "midfielder"),
           p("Blaise Matuidi", 14, "midfielder"), p("Adrien Rabiot", 25, "midfielder"),
           p("Lucas Moura", 7, "forward"), p("Edinson Cavani", 9, "forward"),
           p("Angel Di Maria", 11, "forward")]
AWAY_XI = [p("Petr Cech", 33, "goalkeeper"), p("Hector Bellerin", 24, "defender"),
           p("Shkodran Mustafi", 20, "defender"), p("Laurent Koscielny", 6, "defender"),
           p("Nacho Monreal", 18, "defender"), p("Granit Xhaka", 29, "midfielder"),
           p("Santi Cazorla", 19, "midfielder"), p("Mesut Ozil", 11, "midfielder"),
           p("Alex Oxlade-Chamberlain", 15, "midfielder"), p("Alexis Sanchez", 17, "forward"),
           p("Olivier Giroud", 12, "forward")]
JESE = p("Jese", 29, "forward")
WALCOTT = p("Theo Walcott", 14, "forward")


def clock(h, mm, ss=0):
    return h, mm * 60 + ss


def event(h, mm, kind, team, actor=None, **extra):
    half, off = clock(h, mm)
    e = {"half": half, "offset_s": off, "kind": kind, "team": team}
    if actor:
        e["actor"] = actor
    e.update(extra)
    return e


def talk(h, mm, ss, team, body):
    half, off = clock(h, mm, ss)
    return {"half": half, "offset_s": off, "kind": "commentary", "team": team, "detail": body}


EVENTS = [
    talk(1, 1, 0, "home", "[TEAM] start brightly and press high."),
    event(1, 10, "foul", "away", "Granit Xhaka"),
    event(1, 12, "free_kick", "home", "Angel Di Maria"),
    talk(1, 16, 30, "home", "[PLAYER] finds space down the right."),
    event(1, 18, "goal", "home", "Edinson Cavani", assist="Angel Di Maria"),
    talk(1, 22, 0, "away", "[PLAYER] tries to pick out the overlapping full-back."),
    event(1, 25, "yellow_card", "away", "Granit Xhaka"),
    event(1, 33, "corner", "away", "Alexis Sanchez"),
    talk(1, 37, 0, "home", "[PLAYER] carries the ball out of defence."),
    event(1, 40, "offside", "home", "Edinson Cavani"),
    talk(2, 2, 0, "away", "[TEAM] come out with more urgency after the break."),
    event(2, 5, "header_goal", "away", "Olivier Giroud"),
    event(2, 10, "yellow_card", "home", "Marco Verratti"),
    event(2, 18, "substitution", "home", **{"in": JESE, "out": "Lucas Moura"}),
    talk(2, 20, 0, "home", "[PLAYER] drives at the defence from the left."),
    event(2, 22, "corner", "home", "Angel Di Maria"),
    event(2, 27, "substitution", "away", **{"in": WALCOTT, "out": "Alex Oxlade-Chamberlain"}),
    event(2, 30, "penalty_awarded", "home", "Edinson Cavani"),
    event(2, 31, "penalty_goal", "home", "Edinson Cavani"),
    talk(2, 36, 0, "away", "[PLAYER] demands the ball in the channel."),
    event(2, 40, "own_goal", "home", "Presnel Kimpembe"),
    event(2, 44, "yellow_card", "away", "Theo Walcott"),
]


def q_player(name, team):
    return [
        (f"How many goals has {name} scored for {team} in the 2016-2017 Champions League?",
         f'COUNT goals PLAYER "{name}" FOR "{team}" {SEASON_CLAUSE} {BEFORE}'),
        (f"How many yellow cards has {name} received in the 2016-2017 Champions League?",
         f'COUNT yellow_cards PLAYER "{name}" {SEASON_CLAUSE} {BEFORE}'),
    ]


def q_team(team):
    return [
        (f"What is {team}'s record in the 2016-2017 Champions League?",
         f'RECORD TEAM "{team}" {SEASON_CLAUSE} {BEFORE}'),
        (f"What were {team}'s last three results?",
         f'LAST 3 RESULTS TEAM "{team}" {BEFORE}'),
    ]


# segment id, clock, label, anonymized body, gold player (or side for a team
# query), response style, given team, scene?
SEGMENTS = [
    ("seg01", (1, 18), "goal", "[PLAYER] meets the low cross at the near post and fires [TEAM] ahead.",
     ("home", "Edinson Cavani"), "json_hash", None, True),
    ("seg02", (1, 25), "yellow card", "[PLAYER] goes into the book for a late challenge in midfield.",
     ("away", "Granit Xhaka"), "tagged_name", None, False),
    ("seg03", (1, 33), "corner", "[TEAM] win a corner after a blocked cross.",
     ("away", None), "json_letter", None, False),
    ("seg04", (1, 40), "offside", "[PLAYER] strays offside as the through ball arrives.",
     ("home", "Edinson Cavani"), "json_hash", "home", False),
    ("seg05", (2, 5), "goal", "[PLAYER] rises above his marker and heads [TEAM] level.",
     ("away", "Olivier Giroud"), "tagged_name", None, True),
    ("seg06", (2, 10), "yellow card", "[PLAYER] is cautioned for dissent.",
     ("home", "Marco Verratti"), "json_letter", None, False),
    ("seg07", (2, 22), "corner", "[PLAYER] whips the corner into the six-yard box.",
     ("home", "Angel Di Maria"), "json_hash", "home", False),
    ("seg08", (2, 31), "penalty", "[PLAYER] sends the goalkeeper the wrong way from the spot.",
     ("home", "Edinson Cavani"), "json_name", None, False),
    ("seg09", (2, 40), "own goal", "[PLAYER] turns the ball into his own net under pressure.",
     ("home", "Zlatan Ibrahimovic"), "json_name", None, False),
    ("seg10", (2, 44), "yellow card", "[PLAYER] is booked for a late slide tackle.",
     ("away", "Theo Walcott"), "tagged_name", None, True),
]

REFINED = {
    "seg01": "Edinson Cavani meets Di Maria's low cross at the near post and fires Paris SG ahead.",
    "seg02": "Granit Xhaka goes into the book for a late challenge in midfield.",
    "seg03": "Arsenal win a corner after a blocked cross, still chasing an equaliser.",
    "seg04": "Edinson Cavani strays offside as the through ball arrives; Paris SG still lead 1-0.",
    "seg05": "Olivier Giroud rises above his marker and heads Arsenal level at 1-1.",
    "seg06": "Marco Verratti is cautioned for dissent, the second booking of the night.",
    "seg07": "Angel Di Maria whips the corner into the six-yard box.",
    "seg08": "Edinson Cavani sends the goalkeeper the wrong way from the spot to make it 2-1.",
    "seg10": "Theo Walcott, on as a substitute, is booked for a late slide tackle.",
}


def name_to_player():
    out = {}
    for side, xi, bench in (("home", HOME_XI, [JESE]), ("away", AWAY_XI, [WALCOTT])):
        for pl in xi + bench:
            out[pl["name"]] = (side, pl)
    return out


def scene_for(rng, gold_side, gold_name, players):
    shots = []
    start = 0
    views = ["long", "close_up", "medium", "long"]
    for i, view in enumerate(views):
        end = start + rng.randint(40, 90)
        shot = {"start_frame": start, "end_frame": end, "view": view, "recognized": [],
                "jerseys": []}
        if view in ("close_up", "medium") and gold_name in players:
            side, pl = players[gold_name]
            color = "dark-blue" if side == "home" else "red"
            if view == "close_up":
                shot["recognized"].append(pl)
            shot["jerseys"].append({"name": pl["name"], "number": pl["number"], "color": color,
                                    "action": "celebrates" if i == 1 else "jogs back"})
        shots.append(shot)
        start = end
    return {"shots": shots, "resolved_colors": {"home": "dark-blue", "away": "red"}}


def attention_for(rng):
    layers, heads, queries, frames = 2, 2, 3, 30
    peak = rng.randrange(frames)
    att = []
    for _ in range(layers * heads * queries):
        row = [rng.random() * 0.2 + (1.5 if abs(f - peak) <= 2 else 0.0) for f in range(frames)]
        s = sum(row)
        att.extend(round(x / s, 6) for x in row)
    norms = [round(rng.uniform(0.5, 2.0), 4) for _ in range(queries)]
    return {"layers": layers, "heads": heads, "queries": queries, "frames": frames,
            "attention": att, "query_norms": norms}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent
                                         / "fixtures" / "pipeline"))
    args = ap.parse_args()
    root = pathlib.Path(args.out)
    (root / "scenes").mkdir(parents=True, exist_ok=True)
    (root / "attention").mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)

    log = {
        "meta": {"home": HOME, "away": AWAY, "league": "UEFA Champions League",
                 "season": "2016-2017", "kickoff": KICKOFF, "home_color": "dark blue",
                 "away_color": "red"},
        "lineups": {"home": HOME_XI, "away": AWAY_XI, "home_coach": "Unai Emery",
                    "away_coach": "Arsene Wenger"},
        "events": EVENTS,
    }
    (root / "log.json").write_text(json.dumps(log, indent=2, sort_keys=True) + "\n")

    players = name_to_player()
    bundles, gold = [], {}
    for sid, (h, mm), label, body, (side, name), style, given, has_scene in SEGMENTS:
        half, off = clock(h, mm)
        bundle = {"segment_id": sid, "match_log": "log.json", "attention": f"attention/{sid}.json",
                  "attention_fps": 1.0, "video": f"clips/{sid}.mp4",
                  "commentary": {"body": body, "clock": f"{h} - {mm:02d}:00", "event_label": label},
                  "answer_format": "tagged" if style.startswith("tagged") else "json"}
        if given:
            bundle["given_team"] = given
        if has_scene:
            bundle["scene"] = f"scenes/{sid}.json"
            (root / "scenes" / f"{sid}.json").write_text(
                json.dumps(scene_for(rng, side, name, players), indent=2, sort_keys=True) + "\n")
        (root / "attention" / f"{sid}.json").write_text(json.dumps(attention_for(rng)) + "\n")
        bundles.append(bundle)

        team = HOME if side == "home" else AWAY
        if name is None:
            c_ea = body.replace("[TEAM]", team)
        else:
            c_ea = body.replace("[PLAYER]", name).replace("[TEAM]", team)
        entry = {"video": bundle["video"], "style": style, "side": side, "team": team,
                 "player": name, "c_ea": c_ea, "grounding": [off // 60 % 30, off // 60 % 30 + 4]}
        if name in players:
            entry["number"] = players[name][1]["number"]
            entry["player_team"] = HOME if players[name][0] == "home" else AWAY
        qs = (q_player(name, team) if name in players else []) + q_team(team)
        if sid == "seg07":
            qs[-1] = ("How many corners have Paris SG taken this season?",
                      "COUNT corners TEAM Paris SG BEFORE")
        if sid == "seg03":
            qs = q_team(AWAY) + q_team(HOME)
        entry["questions"] = [q for q, _ in qs][:4]
        while len(entry["questions"]) < 4:
            entry["questions"].append(qs[len(entry["questions"]) % len(qs)][0])
        entry["dsl"] = {q: d for q, d in qs}
        if sid in REFINED:
            entry["refined"] = REFINED[sid]
        gold[sid] = entry

    # top-3 candidates for the hashed and lettered answers: gold first, then
    # two same-side neighbours in lineup order
    for sid, entry in gold.items():
        if entry["player"] in players:
            side = players[entry["player"]][0]
            xi = [pl["name"] for pl in (HOME_XI if side == "home" else AWAY_XI)]
            others = [n for n in xi if n != entry["player"]][:2]
            entry["top3"] = [entry["player"]] + others

    (root / "segments.json").write_text(
        json.dumps({"segments": bundles}, indent=2, sort_keys=True) + "\n")
    (root / "gold.json").write_text(json.dumps(gold, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
