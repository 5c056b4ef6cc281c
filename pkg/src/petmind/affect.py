"""Circumplex affect core: valence/arousal points, event appraisal, noise,
and short-term response selection.

Everything here is a pure function over value types.  The only stateful
input is the caller-supplied seeded RNG, which makes every output
reproducible from (inputs, seed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

# Band boundary for the 3x3 circumplex grid.  The Mid band is the closed
# interval [-BAND_BOUNDARY, BAND_BOUNDARY]; ties resolve to Mid.
BAND_BOUNDARY: float = 1.0 / 3.0

DEFAULT_MOOD_WEIGHT: float = 0.25
DEFAULT_TEMPERAMENT_WEIGHT: float = 0.15


@dataclass(frozen=True, slots=True)
class VAPoint:
    """A point on the valence/arousal plane, both components in [-1, 1]."""

    valence: float
    arousal: float

    def __post_init__(self) -> None:
        for name in ("valence", "arousal"):
            value = getattr(self, name)
            if not -1.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [-1, 1], got {value!r}")


def clamp_component(x: float) -> float:
    return max(-1.0, min(1.0, x))


def clamp_va(valence: float, arousal: float) -> VAPoint:
    """Clip a raw (valence, arousal) pair into the unit square."""
    return VAPoint(clamp_component(valence), clamp_component(arousal))


class EventKind(str, Enum):
    """Semantic classification of an interaction the engine can appraise."""

    STROKE_WITH_GRAIN = "StrokeWithGrain"
    STROKE_AGAINST_GRAIN = "StrokeAgainstGrain"
    PAT = "Pat"
    WORD_GREETING = "WordGreeting"
    WORD_PRAISE = "WordPraise"
    WORD_SCOLD = "WordScold"
    WORD_FEED = "WordFeed"
    WORD_UNKNOWN = "WordUnknown"
    EYE_CONTACT = "EyeContact"
    LOOKING_AWAY = "LookingAway"
    APPROACH_NEAR = "ApproachNear"
    DEPART_FAR = "DepartFar"
    SUSTAINED_NEAR = "SustainedNear"
    NEED_PROMPT = "NeedPrompt"


@dataclass(frozen=True, slots=True)
class AffectEvent:
    """An appraisable event: its kind, intrinsic affect seed, and time.

    ``need``/``severity`` are set only for internally generated
    NeedPrompt events (stored as their wire names, e.g. "Touch"/"Low").
    """

    kind: EventKind
    base_affect: VAPoint
    t_ms: int
    need: str | None = None
    severity: str | None = None


@dataclass(frozen=True, slots=True)
class AppraisedAffect:
    """Post-appraisal, post-noise affect tied back to its source event."""

    va: VAPoint
    source: AffectEvent


class EmotionLabel(str, Enum):
    """The nine short-term emotional responses, one per grid cell."""

    ANGRY = "Angry"
    ALERT = "Alert"
    EXCITED = "Excited"
    UPSET = "Upset"
    NEUTRAL = "Neutral"
    HAPPY = "Happy"
    SAD = "Sad"
    SLEEPY = "Sleepy"
    CONTENT = "Content"


class Band(str, Enum):
    LOW = "Low"
    MID = "Mid"
    HIGH = "High"


def band_of(x: float, boundary: float = BAND_BOUNDARY) -> Band:
    """Band for one axis value: Low below -boundary, High above +boundary,
    Mid on the closed interval between (ties deterministically Mid)."""
    if x < -boundary:
        return Band.LOW
    if x > boundary:
        return Band.HIGH
    return Band.MID


# (arousal band, valence band) -> response label.  Exactly nine cells.
RESPONSE_GRID: dict[tuple[Band, Band], EmotionLabel] = {
    (Band.HIGH, Band.LOW): EmotionLabel.ANGRY,
    (Band.HIGH, Band.MID): EmotionLabel.ALERT,
    (Band.HIGH, Band.HIGH): EmotionLabel.EXCITED,
    (Band.MID, Band.LOW): EmotionLabel.UPSET,
    (Band.MID, Band.MID): EmotionLabel.NEUTRAL,
    (Band.MID, Band.HIGH): EmotionLabel.HAPPY,
    (Band.LOW, Band.LOW): EmotionLabel.SAD,
    (Band.LOW, Band.MID): EmotionLabel.SLEEPY,
    (Band.LOW, Band.HIGH): EmotionLabel.CONTENT,
}


def select_response(va: VAPoint, boundary: float = BAND_BOUNDARY) -> EmotionLabel:
    """Pick the short-term emotional response for a point on the circumplex."""
    return RESPONSE_GRID[(band_of(va.arousal, boundary), band_of(va.valence, boundary))]


def response_region(label: EmotionLabel) -> tuple[Band, Band]:
    """Inverse of the grid: (valence band, arousal band) for a label."""
    for (a_band, v_band), lab in RESPONSE_GRID.items():
        if lab is label:
            return (v_band, a_band)
    raise KeyError(label)


def add_noise(p: VAPoint, sigma: float, rng: random.Random) -> VAPoint:
    """Perturb each component with independent N(0, sigma) noise, then clamp.

    sigma=0 is the identity and consumes no RNG draws.  Draw order is fixed:
    valence first, then arousal.
    """
    if sigma < 0:
        raise ValueError(f"sigma must be >= 0, got {sigma}")
    if sigma == 0:
        return clamp_va(p.valence, p.arousal)
    return clamp_va(
        p.valence + rng.gauss(0.0, sigma),
        p.arousal + rng.gauss(0.0, sigma),
    )


def appraise(
    event: AffectEvent,
    mood: VAPoint,
    temperament: VAPoint,
    noise_sigma: float,
    rng: random.Random,
    *,
    mood_weight: float = DEFAULT_MOOD_WEIGHT,
    temperament_weight: float = DEFAULT_TEMPERAMENT_WEIGHT,
) -> AppraisedAffect:
    """Appraise an event in the current emotional context.

    The raw response is an affine blend, per component:

        base_affect + mood_weight * mood + temperament_weight * temperament

    plus Gaussian noise, with a single clamp at the end.  With noise_sigma=0
    the result is a pure affine function of its inputs (monotone in mood and
    temperament componentwise) and no RNG draws are consumed.
    """
    if noise_sigma < 0:
        raise ValueError(f"noise_sigma must be >= 0, got {noise_sigma}")
    raw_v = (
        event.base_affect.valence
        + mood_weight * mood.valence
        + temperament_weight * temperament.valence
    )
    raw_a = (
        event.base_affect.arousal
        + mood_weight * mood.arousal
        + temperament_weight * temperament.arousal
    )
    if noise_sigma > 0:
        # Same draw order as add_noise: valence first, then arousal.
        raw_v += rng.gauss(0.0, noise_sigma)
        raw_a += rng.gauss(0.0, noise_sigma)
    return AppraisedAffect(va=clamp_va(raw_v, raw_a), source=event)
