"""
Mapping the affect square
=========================

Every feeling the robot can show is a point in a two-dimensional square:
valence (unpleasant to pleasant) runs left to right, arousal (calm to
agitated) runs bottom to top.  A 3x3 banding of the square picks both the
momentary facial response and, for long-run baselines, the personality
archetype.  This script sweeps the square and prints both landscapes,
then shows how one event lands differently depending on mood.
"""

import random

from petmind.affect import AffectEvent, EventKind, VAPoint, appraise, select_response
from petmind.config import default_config
from petmind.display import plan_response_display
from petmind.evolution import archetype_of

# The response landscape: rows sweep arousal from high to low, columns
# sweep valence from negative to positive.  Band boundaries sit at 1/3.
levels = [0.8, 0.0, -0.8]
print("Facial responses across the square (arousal down, valence across):")
for arousal in levels:
    row = [select_response(VAPoint(v, arousal)).value for v in (-0.8, 0.0, 0.8)]
    print(f"  a={arousal:+.1f}  " + " | ".join(f"{label:8}" for label in row))

print()
print("Personality archetypes over the same bands:")
for arousal in levels:
    row = [archetype_of(VAPoint(v, arousal)).value for v in (-0.8, 0.0, 0.8)]
    print(f"  a={arousal:+.1f}  " + " | ".join(f"{label:12}" for label in row))

# One and the same event is appraised through the lens of the current
# mood (weight 0.25) and temperament (weight 0.15).  A scolding stings
# less on a sunny day and in a sunny animal.
print()
print("The same scolding, appraised under three moods:")
cfg = default_config()
scold = AffectEvent(
    kind=EventKind.WORD_SCOLD,
    base_affect=cfg.affect.base_affect[EventKind.WORD_SCOLD],
    t_ms=0,
)
neutral = VAPoint(0.0, 0.0)
for name, mood, temperament in [
    ("gloomy mood", VAPoint(-0.8, -0.2), neutral),
    ("neutral", neutral, neutral),
    ("cheerful mood", VAPoint(0.8, 0.2), neutral),
    ("cheerful + relaxed animal", VAPoint(0.8, -0.5), VAPoint(0.8, -0.8)),
]:
    felt = appraise(
        scold,
        mood=mood,
        temperament=temperament,
        noise_sigma=0.0,
        rng=random.Random(0),
    )
    label = select_response(felt.va)
    print(
        f"  {name:26} -> felt ({felt.va.valence:+.2f}, "
        f"{felt.va.arousal:+.2f}) -> {label.value}"
    )

# Display modalities stack as arousal climbs: the face is always shown,
# a colored aura joins above 0.5, and a sound cue above 0.6.
print()
print("Modalities stacking with arousal at fixed valence +0.6:")
for arousal in (0.3, 0.55, 0.75):
    point = VAPoint(0.6, arousal)
    wire = plan_response_display(select_response(point), point).to_wire(0)
    parts = [f"face={wire['face']}"]
    if "aura" in wire:
        parts.append(f"aura(hue={wire['aura']['hue']:.0f})")
    if "sound" in wire:
        parts.append(f"sound={wire['sound']}")
    print(f"  arousal {arousal:.2f}: " + ", ".join(parts))
