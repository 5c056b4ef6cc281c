"""Long-term affect dynamics: daily moods sampled around a slow-moving
temperament, intra-day mood feedback, end-of-day temperament updates, and
the simulated-time clock that drives day boundaries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum

from .affect import (
    BAND_BOUNDARY,
    AppraisedAffect,
    Band,
    VAPoint,
    band_of,
    clamp_component,
    clamp_va,
)


class Archetype(str, Enum):
    """The nine temperament archetypes, one per circumplex grid cell."""

    IRRITABLE = "Irritable"
    SKITTISH = "Skittish"
    EXCITABLE = "Excitable"
    SULLEN = "Sullen"
    EVEN_TEMPERED = "EvenTempered"
    CHEERFUL = "Cheerful"
    GLOOMY = "Gloomy"
    PLACID = "Placid"
    RELAXED = "Relaxed"


# Same banding as response selection: (arousal band, valence band) -> archetype.
ARCHETYPE_GRID: dict[tuple[Band, Band], Archetype] = {
    (Band.HIGH, Band.LOW): Archetype.IRRITABLE,
    (Band.HIGH, Band.MID): Archetype.SKITTISH,
    (Band.HIGH, Band.HIGH): Archetype.EXCITABLE,
    (Band.MID, Band.LOW): Archetype.SULLEN,
    (Band.MID, Band.MID): Archetype.EVEN_TEMPERED,
    (Band.MID, Band.HIGH): Archetype.CHEERFUL,
    (Band.LOW, Band.LOW): Archetype.GLOOMY,
    (Band.LOW, Band.MID): Archetype.PLACID,
    (Band.LOW, Band.HIGH): Archetype.RELAXED,
}


def archetype_of(va: VAPoint, boundary: float = BAND_BOUNDARY) -> Archetype:
    return ARCHETYPE_GRID[(band_of(va.arousal, boundary), band_of(va.valence, boundary))]


@dataclass(frozen=True, slots=True)
class Temperament:
    """Baseline affect point; its archetype is always derived from ``va``."""

    va: VAPoint
    archetype: Archetype

    @classmethod
    def from_va(cls, va: VAPoint) -> "Temperament":
        return cls(va=va, archetype=archetype_of(va))


@dataclass(frozen=True, slots=True)
class Mood:
    """One simulated day's affect baseline, resampled at each day boundary."""

    va: VAPoint
    day_index: int


@dataclass(slots=True)
class DayLog:
    """Appraisals accumulated over the current simulated day."""

    day_index: int
    appraisals: list[AppraisedAffect] = field(default_factory=list)

    def append(self, appraised: AppraisedAffect) -> None:
        self.appraisals.append(appraised)

    def mean_va(self) -> VAPoint | None:
        if not self.appraisals:
            return None
        n = len(self.appraisals)
        # clamp_va absorbs float summation error at the [-1, 1] edges.
        return clamp_va(
            sum(a.va.valence for a in self.appraisals) / n,
            sum(a.va.arousal for a in self.appraisals) / n,
        )


@dataclass(frozen=True, slots=True)
class EvolutionConfig:
    eta: float = 0.05
    mood_gain: float = 0.02
    mood_range: float = 0.2
    day_length_s: float = 86400.0
    initial_temperament: VAPoint = VAPoint(0.0, 0.0)


def sample_daily_mood(
    temperament: VAPoint, range_r: float, rng: random.Random, day_index: int = 0
) -> Mood:
    """Draw the day's mood uniformly from the +-range_r box around the
    temperament, clamped to bounds.  Draw order: valence, then arousal."""
    if not 0.0 <= range_r <= 1.0:
        raise ValueError(f"range_r must be in [0, 1], got {range_r}")
    if range_r == 0.0:
        va = clamp_va(temperament.valence, temperament.arousal)
    else:
        va = clamp_va(
            temperament.valence + rng.uniform(-range_r, range_r),
            temperament.arousal + rng.uniform(-range_r, range_r),
        )
    return Mood(va=va, day_index=day_index)


def mood_feedback(mood: VAPoint, appraised: AppraisedAffect, gain: float) -> VAPoint:
    """Nudge the mood toward each appraisal: mood + gain * appraised, clamped."""
    if gain < 0:
        raise ValueError(f"gain must be >= 0, got {gain}")
    return clamp_va(
        mood.valence + gain * appraised.va.valence,
        mood.arousal + gain * appraised.va.arousal,
    )


def end_of_day_update(
    temperament: Temperament, log: DayLog, eta: float
) -> Temperament:
    """Move temperament toward the day's mean appraisal by a factor eta.

    An exponential moving average: with a constant daily mean m the
    temperament converges geometrically, t_d = m * (1 - (1 - eta)^d) from
    zero.  An empty day leaves temperament untouched.
    """
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"eta must be in [0, 1], got {eta}")
    mean = log.mean_va()
    if mean is None:
        return temperament
    va = VAPoint(
        clamp_component(
            temperament.va.valence + eta * (mean.valence - temperament.va.valence)
        ),
        clamp_component(
            temperament.va.arousal + eta * (mean.arousal - temperament.va.arousal)
        ),
    )
    return Temperament.from_va(va)


@dataclass(slots=True)
class SimClock:
    """Monotone simulated clock that reports day-boundary crossings.

    Times are simulated milliseconds.  A boundary fires when the clock
    reaches or passes a whole multiple of the day length; ``day_index``
    counts from its starting value (which survives engine restarts).
    """

    day_length_ms: float
    t_ms: float = 0.0
    day_index: int = 0
    _boundaries_crossed: int = 0

    def next_boundary_ms(self) -> float:
        return (self._boundaries_crossed + 1) * self.day_length_ms

    def advance_to(self, t_ms: float) -> list[tuple[float, int]]:
        """Move the clock to t_ms, returning (boundary time, new day index)
        for every day boundary reached, in order."""
        if t_ms < self.t_ms:
            raise ValueError(f"clock cannot go backwards: {t_ms} < {self.t_ms}")
        boundaries: list[tuple[float, int]] = []
        while self.next_boundary_ms() <= t_ms:
            self._boundaries_crossed += 1
            self.day_index += 1
            boundaries.append((self._boundaries_crossed * self.day_length_ms, self.day_index))
        self.t_ms = t_ms
        return boundaries

    def advance(self, dt_ms: float) -> list[tuple[float, int]]:
        if dt_ms < 0:
            raise ValueError(f"dt_ms must be >= 0, got {dt_ms}")
        return self.advance_to(self.t_ms + dt_ms)
