#!/usr/bin/env python3
"""Scripted model endpoint for recording the pipeline fixture.

Serves POST {"digest", "request"} and answers {"text": ...} from gold.json:
entity alignment by video reference, question generation and refinement by
the entity-aligned commentary quoted in the prompt, and DSL translation by the
question text. Used once with `pitchside pipeline run --record` to produce
fixtures/pipeline/recorded.json; tests replay that store offline.
"""

import argparse
import hashlib
import http.server
import json
import pathlib
import string


def player_hash(team, name, number):
    return hashlib.sha256(f"{team}|{name}|{number}".encode()).hexdigest()[:8]


class Responder:
    def __init__(self, gold):
        self.gold = gold
        self.lineups = {}

    def segment_in(self, prompt):
        hits = [g for g in self.gold.values() if g["c_ea"] in prompt]
        if len(hits) != 1:
            raise ValueError(f"prompt matches {len(hits)} segments")
        return hits[0]

    def align(self, req):
        g = next(v for v in self.gold.values() if v["video"] == req["video"])
        options = req["options"]
        style = g["style"]
        if req["variant"] == "team_query":
            answer = string.ascii_uppercase[options.index(g["team"])]
            return "```json\n" + json.dumps({"answer": answer, "grounding": g["grounding"]}) + "\n```"
        if style == "tagged_name":
            return f"The player is identified from the shirt.\n<answer>{g['player']}</answer>"
        if style == "json_name":
            return json.dumps({"answer": g["player"], "grounding": g["grounding"][0]})
        keys = [player_hash(g["player_team"], n, self.lineups[n]) for n in g["top3"]]
        if style == "json_letter":
            letters = [string.ascii_uppercase[options.index(k)] for k in keys]
            body = {"answer": letters[0] + ".", "top3": letters, "grounding": g["grounding"]}
        else:
            body = {"answer": keys[0], "top3": keys, "grounding": g["grounding"]}
        return "```json\n" + json.dumps(body) + "\n```"

    def respond(self, req):
        task = req["task"]
        if task == "entity_alignment":
            return self.align(req)
        if task == "question_generation":
            g = self.segment_in(req["prompt"])
            return json.dumps({"questions": g["questions"]})
        if task == "dsl_translation":
            for g in self.gold.values():
                for q, dsl in g["dsl"].items():
                    if f"Question: {q}" in req["prompt"]:
                        return dsl
            raise ValueError("unknown question")
        if task == "refinement":
            return self.segment_in(req["prompt"])["refined"]
        raise ValueError(f"unknown task {task}")


def main():
    ap = argparse.ArgumentParser()
    root = pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "pipeline"
    ap.add_argument("--gold", default=str(root / "gold.json"))
    ap.add_argument("--log", default=str(root / "log.json"))
    ap.add_argument("--port", type=int, default=8765)
    args = ap.parse_args()
    responder = Responder(json.loads(pathlib.Path(args.gold).read_text()))
    log = json.loads(pathlib.Path(args.log).read_text())
    for side in ("home", "away"):
        for pl in log["lineups"][side]:
            responder.lineups[pl["name"]] = pl["number"]
    for e in log["events"]:
        if isinstance(e.get("in"), dict):
            responder.lineups[e["in"]["name"]] = e["in"]["number"]

    class Handler(http.server.BaseHTTPRequestHandler):
        def do_POST(self):
            body = json.loads(self.rfile.read(int(self.headers["Content-Length"])))
            try:
                text = responder.respond(body["request"])
                payload, status = json.dumps({"text": text}).encode(), 200
            except Exception as e:  # reported to the client as a server error
                payload, status = json.dumps({"error": str(e)}).encode(), 500
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(payload)))
            self.end_headers()
            self.wfile.write(payload)

        def log_message(self, *a):
            pass

    http.server.ThreadingHTTPServer(("127.0.0.1", args.port), Handler).serve_forever()


if __name__ == "__main__":
    main()
