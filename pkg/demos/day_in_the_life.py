"""
A visit, replayed as a story
============================

The committed two-minute scenario (demo.scn) walks one visitor through a
full repertoire: approaching, greeting, petting with and against the
grain, feeding, and leaving.  This script runs it and narrates the record
stream: what happened, how it felt, what showed on the face, and where
the need meters stood.  Same seed, same bytes, every run.

Responses queue first-in-first-out and each holds the face for its full
duration, so a burst of events plays back as a short backlog of faces;
the idle mood face resumes whenever the queue drains.
"""

from pathlib import Path

from petmind.harness import run
from petmind.scenario import load_scenario

scenario = load_scenario(Path(__file__).with_name("demo.scn"))
print(f"Replaying {len(scenario.entries)} sensor entries with seed {scenario.seed}")
print()

# The engine interleaves several record types at each moment; stitching
# event/appraisal/response triples back together reads like a diary.
pending: dict[int, dict] = {}
for record in run(scenario):
    t = record["t_ms"] / 1000.0
    body = record["body"]
    if record["type"] == "event":
        pending[body["id"]] = {"kind": body["kind"], "t": t}
    elif record["type"] == "appraisal":
        pending[body["event_id"]]["felt"] = (body["valence"], body["arousal"])
    elif record["type"] == "response":
        entry = pending.pop(body["event_id"])
        v, a = entry["felt"]
        print(
            f"{entry['t']:7.1f}s  {entry['kind']:18} felt ({v:+.2f}, {a:+.2f})"
            f"  -> {body['label']}"
        )
    elif record["type"] == "directive" and body["reason"] == "PassiveMood":
        print(f"{t:7.1f}s  (idle face settles on {body['face']})")
    elif record["type"] == "directive" and body["reason"] == "NeedPrompt":
        print(f"{t:7.1f}s  !! asks for attention: {body['bubble']} bubble")

# A glance at the meters at the end of the visit: touch and social were
# topped up by the petting and chatter, hunger by the feeding.
records = run(scenario)
final_needs = [r for r in records if r["type"] == "needs"][-1]["body"]
print()
print("Need meters when the visitor leaves:")
for need, value in final_needs.items():
    bar = "#" * int(value * 30)
    print(f"  {need:7} {value:5.3f}  {bar}")
