"""Sensor-to-event classification: directional strokes over five touch
regions, word category lookup, gaze-angle dwell, and proximity zones.

Each tracker is a small state machine fed time-ordered samples.  Trackers
expose ``deadline_ms`` so the engine can schedule time-triggered emissions
(a pat once a touch chain goes quiet, a dwell or sustain firing) exactly,
independent of sample rate.  Emissions are ``(kind, t_ms)`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Final, Iterable

from .affect import EventKind

Emission = tuple[EventKind, float]


class TouchRegion(str, Enum):
    FRONT = "Front"
    BACK = "Back"
    LEFT = "Left"
    RIGHT = "Right"
    TOP = "Top"


def parse_region(name: str) -> TouchRegion:
    """Touch region from its wire name, case-insensitively."""
    try:
        return TouchRegion(name.strip().capitalize())
    except (ValueError, AttributeError):
        raise ValueError(f"unknown touch region {name!r}") from None


@dataclass(frozen=True, slots=True)
class TouchContact:
    region: TouchRegion
    t_ms: float


@dataclass(frozen=True, slots=True)
class GazeSample:
    angle_deg: float
    t_ms: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.angle_deg <= 180.0:
            raise ValueError(f"angle_deg must be in [0, 180], got {self.angle_deg}")


@dataclass(frozen=True, slots=True)
class ProximitySample:
    distance_m: float
    t_ms: float

    def __post_init__(self) -> None:
        if self.distance_m < 0.0:
            raise ValueError(f"distance_m must be >= 0, got {self.distance_m}")


@dataclass(frozen=True, slots=True)
class InteractionConfig:
    stroke_window_ms: float = 1500.0
    gaze_eye_deg: float = 15.0
    gaze_away_deg: float = 90.0
    gaze_dwell_ms: float = 2000.0
    near_m: float = 1.0
    far_m: float = 3.0
    sustain_near_ms: float = 10000.0

    def __post_init__(self) -> None:
        if self.stroke_window_ms <= 0:
            raise ValueError("stroke_window_ms must be positive")
        if not 0.0 < self.gaze_eye_deg < self.gaze_away_deg:
            raise ValueError("need 0 < gaze_eye_deg < gaze_away_deg")
        if not 0.0 < self.near_m < self.far_m:
            raise ValueError("need 0 < near_m < far_m")
        if self.gaze_dwell_ms <= 0 or self.sustain_near_ms <= 0:
            raise ValueError("dwell and sustain durations must be positive")


# ---------------------------------------------------------------------------
# Strokes


_LATERAL: Final = (TouchRegion.LEFT, TouchRegion.RIGHT)


def _completed_stroke(chain: list[TouchRegion]) -> EventKind | None:
    """Stroke ending at the newest contact, if any.

    Front..Back with only Top contacts between reads with the grain;
    Back..Front against it.  A lateral stroke is two directly adjacent
    Left/Right contacts, either direction.  Mixed-axis chains never
    complete and fall out as a pat when the chain expires.
    """
    last = chain[-1]
    if last in (TouchRegion.BACK, TouchRegion.FRONT):
        want = TouchRegion.FRONT if last is TouchRegion.BACK else TouchRegion.BACK
        i = len(chain) - 2
        while i >= 0 and chain[i] is TouchRegion.TOP:
            i -= 1
        if i >= 0 and chain[i] is want:
            if last is TouchRegion.BACK:
                return EventKind.STROKE_WITH_GRAIN
            return EventKind.STROKE_AGAINST_GRAIN
        return None
    if last in _LATERAL and len(chain) >= 2:
        prev = chain[-2]
        if prev in _LATERAL and prev is not last:
            return EventKind.STROKE_WITH_GRAIN
    return None


@dataclass(slots=True)
class StrokeTracker:
    """Chains touch contacts whose gaps stay under the window.

    A chain completes as a stroke the moment a contact finishes a
    recognised pattern; otherwise it expires into a single Pat at
    last contact + window.  A contact landing exactly on that deadline
    starts a fresh chain (the pat fires first).
    """

    window_ms: float = 1500.0
    _chain: list[TouchContact] = field(default_factory=list)
    _last_t: float = float("-inf")

    def deadline_ms(self) -> float | None:
        if not self._chain:
            return None
        return self._chain[-1].t_ms + self.window_ms

    def poll(self, now_ms: float) -> list[Emission]:
        deadline = self.deadline_ms()
        if deadline is not None and deadline <= now_ms:
            self._chain.clear()
            return [(EventKind.PAT, deadline)]
        return []

    def push(self, contact: TouchContact) -> list[Emission]:
        if contact.t_ms < self._last_t:
            raise ValueError(
                f"contacts must be time-ordered: {contact.t_ms} < {self._last_t}"
            )
        out = self.poll(contact.t_ms)
        self._last_t = contact.t_ms
        self._chain.append(contact)
        kind = _completed_stroke([c.region for c in self._chain])
        if kind is not None:
            self._chain.clear()
            out.append((kind, contact.t_ms))
        return out

    def flush(self) -> list[Emission]:
        """End of observation: the pending chain, if any, becomes a Pat."""
        return self.poll(float("inf"))


def classify_stroke(
    contacts: Iterable[TouchContact], window_ms: float = 1500.0
) -> EventKind | None:
    """Kind of the first gesture in a contact sequence; None when empty."""
    tracker = StrokeTracker(window_ms=window_ms)
    for contact in contacts:
        for kind, _t in tracker.push(contact):
            return kind
    for kind, _t in tracker.flush():
        return kind
    return None


# ---------------------------------------------------------------------------
# Words


_CATEGORY_KINDS: Final = {
    "greeting": EventKind.WORD_GREETING,
    "praise": EventKind.WORD_PRAISE,
    "scold": EventKind.WORD_SCOLD,
    "feed": EventKind.WORD_FEED,
}


@dataclass(frozen=True, slots=True)
class Lexicon:
    """Exact-token, case-insensitive word -> category map."""

    words: dict[str, EventKind]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> "Lexicon":
        words: dict[str, EventKind] = {}
        for word, category in pairs:
            key = word.strip().lower()
            cat = category.strip().lower()
            if not key:
                raise ValueError("empty word in lexicon")
            if cat not in _CATEGORY_KINDS:
                raise ValueError(
                    f"unknown word category {category!r}; "
                    f"expected one of {sorted(_CATEGORY_KINDS)}"
                )
            words[key] = _CATEGORY_KINDS[cat]
        return cls(words=words)

    @classmethod
    def from_text(cls, text: str) -> "Lexicon":
        """Parse "word,category" lines; blank lines and #-comments skipped."""
        pairs: list[tuple[str, str]] = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split(",")
            if len(parts) != 2:
                raise ValueError(f"lexicon line {lineno}: expected 'word,category'")
            pairs.append((parts[0], parts[1]))
        return cls.from_pairs(pairs)

    @classmethod
    def from_file(cls, path: str | Path) -> "Lexicon":
        return cls.from_text(Path(path).read_text(encoding="utf-8"))


DEFAULT_LEXICON: Final = Lexicon.from_pairs(
    [
        ("hello", "greeting"),
        ("hi", "greeting"),
        ("good", "praise"),
        ("nice", "praise"),
        ("bad", "scold"),
        ("no", "scold"),
        ("food", "feed"),
        ("eat", "feed"),
    ]
)


def classify_word(word: str, lexicon: Lexicon = DEFAULT_LEXICON) -> EventKind:
    return lexicon.words.get(word.lower(), EventKind.WORD_UNKNOWN)


# ---------------------------------------------------------------------------
# Gaze


class _GazeBand(Enum):
    EYE = "eye"
    DEAD = "dead"
    AWAY = "away"


_GAZE_KINDS: Final = {
    _GazeBand.EYE: EventKind.EYE_CONTACT,
    _GazeBand.AWAY: EventKind.LOOKING_AWAY,
}


@dataclass(slots=True)
class GazeTracker:
    """Emits one event per sustained episode inside the eye or away band.

    The episode clock starts at the first sample inside the band and the
    event fires exactly at entry + dwell; leaving the band re-arms.  Band
    membership is strict (angle equal to a threshold is the dead band).
    """

    eye_deg: float = 15.0
    away_deg: float = 90.0
    dwell_ms: float = 2000.0
    _band: _GazeBand = _GazeBand.DEAD
    _entry_t: float = 0.0
    _fired: bool = True
    _last_t: float = float("-inf")

    def _band_of(self, angle_deg: float) -> _GazeBand:
        if angle_deg < self.eye_deg:
            return _GazeBand.EYE
        if angle_deg > self.away_deg:
            return _GazeBand.AWAY
        return _GazeBand.DEAD

    def deadline_ms(self) -> float | None:
        if self._fired:
            return None
        return self._entry_t + self.dwell_ms

    def poll(self, now_ms: float) -> list[Emission]:
        deadline = self.deadline_ms()
        if deadline is not None and deadline <= now_ms:
            self._fired = True
            return [(_GAZE_KINDS[self._band], deadline)]
        return []

    def push(self, sample: GazeSample) -> list[Emission]:
        if sample.t_ms < self._last_t:
            raise ValueError(
                f"samples must be time-ordered: {sample.t_ms} < {self._last_t}"
            )
        out = self.poll(sample.t_ms)
        self._last_t = sample.t_ms
        band = self._band_of(sample.angle_deg)
        if band is not self._band:
            self._band = band
            self._entry_t = sample.t_ms
            self._fired = band is _GazeBand.DEAD
        return out


# ---------------------------------------------------------------------------
# Proximity


class _Zone(Enum):
    NEAR = "near"
    MID = "mid"
    FAR = "far"


@dataclass(slots=True)
class ProximityTracker:
    """Zone transitions fire immediately; staying near also fires a
    SustainedNear every sustain interval, timed from near-zone entry.

    The first sample only establishes the zone (no transition event),
    though a first sample already near does start the sustain clock.
    """

    near_m: float = 1.0
    far_m: float = 3.0
    sustain_ms: float = 10000.0
    _zone: _Zone | None = None
    _near_entry_t: float = 0.0
    _sustain_count: int = 0
    _last_t: float = float("-inf")

    def _zone_of(self, distance_m: float) -> _Zone:
        if distance_m < self.near_m:
            return _Zone.NEAR
        if distance_m > self.far_m:
            return _Zone.FAR
        return _Zone.MID

    def deadline_ms(self) -> float | None:
        if self._zone is not _Zone.NEAR:
            return None
        return self._near_entry_t + (self._sustain_count + 1) * self.sustain_ms

    def poll(self, now_ms: float) -> list[Emission]:
        out: list[Emission] = []
        while True:
            deadline = self.deadline_ms()
            if deadline is None or deadline > now_ms:
                return out
            self._sustain_count += 1
            out.append((EventKind.SUSTAINED_NEAR, deadline))

    def push(self, sample: ProximitySample) -> list[Emission]:
        if sample.t_ms < self._last_t:
            raise ValueError(
                f"samples must be time-ordered: {sample.t_ms} < {self._last_t}"
            )
        out = self.poll(sample.t_ms)
        self._last_t = sample.t_ms
        zone = self._zone_of(sample.distance_m)
        if zone is not self._zone:
            previous = self._zone
            if zone is _Zone.NEAR:
                if previous is not None:
                    out.append((EventKind.APPROACH_NEAR, sample.t_ms))
                self._near_entry_t = sample.t_ms
                self._sustain_count = 0
            elif zone is _Zone.FAR and previous is not None:
                out.append((EventKind.DEPART_FAR, sample.t_ms))
            self._zone = zone
        return out
