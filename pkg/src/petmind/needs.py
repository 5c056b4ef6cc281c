"""Internal need meters: decay, replenishment from events, and
threshold-triggered prompts with hysteresis.

Meters live in [0, 1] and only ever change through the pure transition
functions below, which return new states (value semantics).  Rest is the
odd one out: it drains while the robot is being interacted with and
regenerates while idle.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from .affect import EventKind


class NeedKind(str, Enum):
    TOUCH = "Touch"
    REST = "Rest"
    SOCIAL = "Social"
    HUNGER = "Hunger"


class Severity(str, Enum):
    LOW = "Low"
    CRITICAL = "Critical"


@dataclass(frozen=True, slots=True)
class NeedPrompt:
    """An internally generated motivation: a need has run low."""

    need: NeedKind
    severity: Severity


_METER_FIELDS: dict[NeedKind, str] = {
    NeedKind.TOUCH: "touch",
    NeedKind.REST: "rest",
    NeedKind.SOCIAL: "social",
    NeedKind.HUNGER: "hunger",
}

_ALL_NEEDS = frozenset(NeedKind)


@dataclass(frozen=True, slots=True)
class NeedsState:
    """The four meters plus per-need, per-severity re-arm latches.

    A latch being set means the corresponding prompt may fire on the next
    downward crossing; it clears when the prompt fires and sets again once
    the meter rises above the re-arm threshold.
    """

    touch: float = 1.0
    rest: float = 1.0
    social: float = 1.0
    hunger: float = 1.0
    armed_low: frozenset[NeedKind] = field(default=_ALL_NEEDS)
    armed_critical: frozenset[NeedKind] = field(default=_ALL_NEEDS)

    def meter(self, kind: NeedKind) -> float:
        return getattr(self, _METER_FIELDS[kind])

    def meters(self) -> dict[str, float]:
        """Meters keyed by wire name (lowercase), in fixed need order."""
        return {_METER_FIELDS[k]: self.meter(k) for k in NeedKind}


@dataclass(frozen=True, slots=True)
class NeedsConfig:
    """Rates, thresholds, and the event replenishment table."""

    decay_rates: dict[NeedKind, float] = field(
        default_factory=lambda: {
            NeedKind.TOUCH: 0.0010,
            NeedKind.REST: 0.0005,
            NeedKind.SOCIAL: 0.0008,
            NeedKind.HUNGER: 0.0005,
        }
    )
    prompt_threshold: float = 0.3
    critical_threshold: float = 0.1
    rearm_threshold: float = 0.5
    idle_after_s: float = 120.0
    rest_regen_per_s: float = 0.01
    replenish: dict[EventKind, dict[NeedKind, float]] = field(
        default_factory=lambda: {
            EventKind.STROKE_WITH_GRAIN: {NeedKind.TOUCH: 0.15, NeedKind.SOCIAL: 0.05},
            EventKind.PAT: {NeedKind.TOUCH: 0.15, NeedKind.SOCIAL: 0.05},
            EventKind.STROKE_AGAINST_GRAIN: {NeedKind.TOUCH: 0.05},
            EventKind.SUSTAINED_NEAR: {NeedKind.SOCIAL: 0.02},
            EventKind.WORD_GREETING: {NeedKind.SOCIAL: 0.05},
            EventKind.WORD_PRAISE: {NeedKind.SOCIAL: 0.05},
            EventKind.WORD_SCOLD: {NeedKind.SOCIAL: 0.05},
            EventKind.WORD_FEED: {NeedKind.SOCIAL: 0.05, NeedKind.HUNGER: 0.5},
        }
    )


def _rearm(state: NeedsState, rearm_threshold: float) -> NeedsState:
    """Set latches for any meter sitting above the re-arm threshold."""
    high = {k for k in NeedKind if state.meter(k) > rearm_threshold}
    if not high:
        return state
    return replace(
        state,
        armed_low=state.armed_low | high,
        armed_critical=state.armed_critical | high,
    )


def decay_tick(
    state: NeedsState, dt_s: float, cfg: NeedsConfig, *, interacting: bool
) -> NeedsState:
    """Advance the meters by dt_s seconds of linear decay, floored at 0.

    Rest decays only while ``interacting``; otherwise it regenerates at
    ``rest_regen_per_s``, capped at 1.  Additive in dt within one mode:
    decaying by a then b equals decaying by a + b.
    """
    if dt_s < 0:
        raise ValueError(f"dt_s must be >= 0, got {dt_s}")
    if dt_s == 0:
        return state
    values: dict[str, float] = {}
    for kind in NeedKind:
        v = state.meter(kind)
        if kind is NeedKind.REST and not interacting:
            v = min(1.0, v + cfg.rest_regen_per_s * dt_s)
        else:
            v = max(0.0, v - cfg.decay_rates[kind] * dt_s)
        values[_METER_FIELDS[kind]] = v
    return _rearm(replace(state, **values), cfg.rearm_threshold)


def apply_event_to_needs(
    state: NeedsState, kind: EventKind, cfg: NeedsConfig
) -> NeedsState:
    """Replenish meters for one event per the table; unknown kinds no-op.

    Raised meters re-arm their prompt latches when they pass the re-arm
    threshold.
    """
    deltas = cfg.replenish.get(kind)
    if not deltas:
        return state
    values: dict[str, float] = {}
    for need, delta in deltas.items():
        v = state.meter(need) + delta
        values[_METER_FIELDS[need]] = max(0.0, min(1.0, v))
    return _rearm(replace(state, **values), cfg.rearm_threshold)


def check_thresholds(
    prev: NeedsState, nxt: NeedsState, cfg: NeedsConfig
) -> tuple[list[NeedPrompt], NeedsState]:
    """Emit prompts for meters that crossed a threshold downward while armed.

    Returns the prompts (fixed need order, Low before Critical) and the
    state with fired latches cleared.  A latch fires at most once until the
    meter re-arms above the re-arm threshold.
    """
    prompts: list[NeedPrompt] = []
    armed_low = set(nxt.armed_low)
    armed_critical = set(nxt.armed_critical)
    for kind in NeedKind:
        before, after = prev.meter(kind), nxt.meter(kind)
        if kind in armed_low and before > cfg.prompt_threshold >= after:
            prompts.append(NeedPrompt(kind, Severity.LOW))
            armed_low.discard(kind)
        if kind in armed_critical and before > cfg.critical_threshold >= after:
            prompts.append(NeedPrompt(kind, Severity.CRITICAL))
            armed_critical.discard(kind)
    if not prompts:
        return [], nxt
    return prompts, replace(
        nxt,
        armed_low=frozenset(armed_low),
        armed_critical=frozenset(armed_critical),
    )
