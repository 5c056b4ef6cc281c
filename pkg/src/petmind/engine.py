"""The single-threaded simulation engine: appraisal loop, needs, daily
evolution, trackers, and the directive queue, driven by simulated time.

Determinism contract
--------------------
One ``random.Random(seed)`` serves the whole engine.  Draw order is fixed:
two uniform draws for the initial mood at construction, then, in simulated
time order, two Gaussian draws per appraisal (when noise is on) and two
uniform draws per day boundary for the next day's mood.

Between external inputs the engine jumps directly between scheduled
occurrences (need threshold crossings, the idle switch, tracker deadlines,
directive expiry, day boundaries).  Occurrences at equal times run in a
fixed rank order.  Needs integrate in one step per inter-occurrence
interval, so the record log is byte-identical no matter how finely
``advance_to`` is called; a live ticking service and an offline replay of
the same inputs produce the same log.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import replace

from .affect import (
    AffectEvent,
    EventKind,
    VAPoint,
    appraise,
    select_response,
)
from .config import EngineConfig, default_config, validate_config
from .display import (
    DirectiveReason,
    DisplayDirective,
    plan_need_display,
    plan_passive_display,
    plan_response_display,
)
from .evolution import (
    DayLog,
    Mood,
    SimClock,
    Temperament,
    end_of_day_update,
    mood_feedback,
    sample_daily_mood,
)
from .interactions import (
    GazeSample,
    GazeTracker,
    ProximitySample,
    ProximityTracker,
    StrokeTracker,
    TouchContact,
    TouchRegion,
    classify_word,
    parse_region,
)
from .needs import (
    NeedKind,
    NeedPrompt,
    NeedsState,
    apply_event_to_needs,
    check_thresholds,
    decay_tick,
)

# Meters this close to a threshold at a predicted crossing are snapped to
# it, so float rounding cannot stall or duplicate a crossing occurrence.
_SNAP_EPS = 1e-9

# Fixed processing order for occurrences scheduled at the same instant.
_RANK_CROSSING = 0
_RANK_IDLE = 1
_RANK_STROKE = 2
_RANK_GAZE = 3
_RANK_PROXIMITY = 4
_RANK_EXPIRY = 5
_RANK_BOUNDARY = 6


class Engine:
    """Owns all mutable state; callers feed it time-ordered inputs.

    Not thread-safe by design: the service layer serializes access by
    funnelling every mutation through one tick loop.
    """

    def __init__(
        self,
        cfg: EngineConfig | None = None,
        seed: int = 0,
        *,
        day_index: int = 0,
        needs: NeedsState | None = None,
        temperament: VAPoint | None = None,
    ) -> None:
        self.cfg = cfg if cfg is not None else default_config()
        validate_config(self.cfg)
        self.seed = seed
        self.rng = random.Random(seed)
        ev = self.cfg.evolution
        self.clock = SimClock(day_length_ms=ev.day_length_s * 1000.0, day_index=day_index)
        base = temperament if temperament is not None else ev.initial_temperament
        self.temperament = Temperament.from_va(base)
        self.mood: Mood = sample_daily_mood(
            self.temperament.va, ev.mood_range, self.rng, day_index
        )
        self.day_log = DayLog(day_index=day_index)
        self.needs = needs if needs is not None else NeedsState()
        self._needs_anchor_ms = 0.0
        self._now_ms = 0.0
        self._interacting = False
        self._idle_switch_ms = 0.0
        ic = self.cfg.interaction
        self._strokes = StrokeTracker(window_ms=ic.stroke_window_ms)
        self._gaze = GazeTracker(
            eye_deg=ic.gaze_eye_deg,
            away_deg=ic.gaze_away_deg,
            dwell_ms=ic.gaze_dwell_ms,
        )
        self._proximity = ProximityTracker(
            near_m=ic.near_m, far_m=ic.far_m, sustain_ms=ic.sustain_near_ms
        )
        self._event_seq = 0
        self.records: list[dict] = []
        self._active: DisplayDirective | None = None
        self._active_expiry_ms: float | None = None
        self._queued_responses: deque[DisplayDirective] = deque()
        self._queued_prompts: deque[DisplayDirective] = deque()
        self._emit_passive(0.0)

    # -- queries ------------------------------------------------------------

    @property
    def now_ms(self) -> float:
        return self._now_ms

    def needs_at(self, t_ms: float | None = None) -> NeedsState:
        """Meters decayed out to ``t_ms`` (default: now) without mutating."""
        t = self._now_ms if t_ms is None else t_ms
        dt_s = (t - self._needs_anchor_ms) / 1000.0
        if dt_s <= 0:
            return self.needs
        return decay_tick(
            self.needs, dt_s, self.cfg.needs, interacting=self._interacting
        )

    def state_snapshot(self) -> dict:
        """The wire "state" body: mood, temperament, needs, clock."""
        return {
            "mood": {
                "valence": self.mood.va.valence,
                "arousal": self.mood.va.arousal,
            },
            "temperament": {
                "valence": self.temperament.va.valence,
                "arousal": self.temperament.va.arousal,
                "archetype": self.temperament.archetype.value,
            },
            "needs": self.needs_at().meters(),
            "clock": {"t_ms": int(round(self._now_ms)), "day": self.clock.day_index},
        }

    def persistence_snapshot(self) -> dict:
        """The durable subset reloaded across restarts."""
        return {
            "temperament": [self.temperament.va.valence, self.temperament.va.arousal],
            "needs": self.needs_at().meters(),
            "day_index": self.clock.day_index,
        }

    def drain_records(self) -> list[dict]:
        """Hand over and forget accumulated records (for streaming use)."""
        out = self.records
        self.records = []
        return out

    # -- time ---------------------------------------------------------------

    def advance_to(self, t_ms: float) -> None:
        """Process every scheduled occurrence up to and including t_ms.

        Does not integrate needs to t_ms itself; meters materialize only at
        occurrences and inputs, keeping arithmetic independent of how often
        this is called.
        """
        if t_ms < self._now_ms:
            raise ValueError(f"time went backwards: {t_ms} < {self._now_ms}")
        while True:
            occurrence = self._next_occurrence(t_ms)
            if occurrence is None:
                break
            t_occ, rank = occurrence
            self._run_occurrence(t_occ, rank)
            self._now_ms = max(self._now_ms, t_occ)
        crossed = self.clock.advance_to(t_ms)
        assert not crossed, "unprocessed day boundary"
        self._now_ms = t_ms

    # -- inputs -------------------------------------------------------------

    def ingest_touch(self, region: TouchRegion | str, t_ms: float) -> None:
        self._pre_ingest(t_ms)
        if isinstance(region, str):
            region = parse_region(region)
        for kind, t in self._strokes.push(TouchContact(region=region, t_ms=t_ms)):
            self._process_user_event(kind, t)

    def ingest_word(self, text: str, t_ms: float) -> None:
        self._pre_ingest(t_ms)
        self._process_user_event(classify_word(text, self.cfg.lexicon), t_ms)

    def ingest_gaze(self, angle_deg: float, t_ms: float) -> None:
        sample = GazeSample(angle_deg=angle_deg, t_ms=t_ms)
        self._pre_ingest(t_ms)
        for kind, t in self._gaze.push(sample):
            self._process_user_event(kind, t)

    def ingest_proximity(self, distance_m: float, t_ms: float) -> None:
        sample = ProximitySample(distance_m=distance_m, t_ms=t_ms)
        self._pre_ingest(t_ms)
        for kind, t in self._proximity.push(sample):
            self._process_user_event(kind, t)

    def _pre_ingest(self, t_ms: float) -> None:
        self.advance_to(t_ms)
        self._integrate_to(t_ms)

    # -- occurrence scheduling ---------------------------------------------

    def _next_occurrence(self, limit_ms: float) -> tuple[float, int] | None:
        best: tuple[float, int, int] | None = None

        def consider(t: float, rank: int, sub: int = 0) -> None:
            nonlocal best
            if t > limit_ms:
                return
            key = (t, rank, sub)
            if best is None or key < best:
                best = key

        cfg_needs = self.cfg.needs
        for i, kind in enumerate(NeedKind):
            if kind is NeedKind.REST and not self._interacting:
                continue
            rate = cfg_needs.decay_rates[kind]
            if rate <= 0:
                continue
            meter = self.needs.meter(kind)
            pairs = (
                (kind in self.needs.armed_low, cfg_needs.prompt_threshold),
                (kind in self.needs.armed_critical, cfg_needs.critical_threshold),
            )
            for j, (armed, threshold) in enumerate(pairs):
                if armed and meter > threshold:
                    t_cross = self._needs_anchor_ms + (meter - threshold) / rate * 1000.0
                    consider(t_cross, _RANK_CROSSING, i * 2 + j)
        if self._interacting:
            consider(self._idle_switch_ms, _RANK_IDLE)
        trackers = (
            (_RANK_STROKE, self._strokes),
            (_RANK_GAZE, self._gaze),
            (_RANK_PROXIMITY, self._proximity),
        )
        for rank, tracker in trackers:
            deadline = tracker.deadline_ms()
            if deadline is not None:
                consider(deadline, rank)
        if self._active_expiry_ms is not None:
            consider(self._active_expiry_ms, _RANK_EXPIRY)
        consider(self.clock.next_boundary_ms(), _RANK_BOUNDARY)
        if best is None:
            return None
        return best[0], best[1]

    def _run_occurrence(self, t: float, rank: int) -> None:
        if rank == _RANK_CROSSING:
            self._integrate_to(t, snap=True)
        elif rank == _RANK_IDLE:
            self._integrate_to(t)
            self._interacting = False
        elif rank in (_RANK_STROKE, _RANK_GAZE, _RANK_PROXIMITY):
            self._integrate_to(t)
            tracker = {
                _RANK_STROKE: self._strokes,
                _RANK_GAZE: self._gaze,
                _RANK_PROXIMITY: self._proximity,
            }[rank]
            for kind, t_emit in tracker.poll(t):
                self._process_user_event(kind, t_emit)
        elif rank == _RANK_EXPIRY:
            self._integrate_to(t)
            self._expire_active(t)
        elif rank == _RANK_BOUNDARY:
            self._integrate_to(t)
            for t_boundary, day in self.clock.advance_to(t):
                self._process_boundary(t_boundary, day)
        else:  # pragma: no cover
            raise AssertionError(f"unknown occurrence rank {rank}")

    # -- needs integration --------------------------------------------------

    def _integrate_to(self, t: float, snap: bool = False) -> None:
        dt_s = (t - self._needs_anchor_ms) / 1000.0
        if dt_s < 0:
            raise AssertionError("needs anchor ahead of integration target")
        if dt_s == 0 and not snap:
            return
        prev = self.needs
        nxt = prev
        if dt_s > 0:
            nxt = decay_tick(prev, dt_s, self.cfg.needs, interacting=self._interacting)
        if snap:
            nxt = self._snap_thresholds(nxt)
        prompts, nxt = check_thresholds(prev, nxt, self.cfg.needs)
        self.needs = nxt
        self._needs_anchor_ms = t
        for prompt in prompts:
            self._process_prompt(prompt, t)

    def _snap_thresholds(self, state: NeedsState) -> NeedsState:
        values: dict[str, float] = state.meters()
        changed = False
        thresholds = (self.cfg.needs.prompt_threshold, self.cfg.needs.critical_threshold)
        for name, value in values.items():
            for threshold in thresholds:
                if value != threshold and abs(value - threshold) < _SNAP_EPS:
                    values[name] = threshold
                    changed = True
                    break
        if not changed:
            return state
        return replace(state, **values)

    # -- event pipeline -----------------------------------------------------

    def _emit(self, t: float, record_type: str, body: dict) -> None:
        self.records.append({"t_ms": int(round(t)), "type": record_type, "body": body})

    def _process_user_event(self, kind: EventKind, t: float) -> None:
        cfg = self.cfg
        self._event_seq += 1
        event_id = self._event_seq
        event = AffectEvent(
            kind=kind, base_affect=cfg.affect.base_affect[kind], t_ms=int(round(t))
        )
        self._emit(t, "event", {"id": event_id, "kind": kind.value})
        self._interacting = True
        self._idle_switch_ms = t + cfg.needs.idle_after_s * 1000.0
        appraised = appraise(
            event,
            self.mood.va,
            self.temperament.va,
            cfg.affect.noise_sigma,
            self.rng,
            mood_weight=cfg.affect.mood_weight,
            temperament_weight=cfg.affect.temperament_weight,
        )
        self._emit(
            t,
            "appraisal",
            {
                "event_id": event_id,
                "valence": appraised.va.valence,
                "arousal": appraised.va.arousal,
            },
        )
        self.mood = Mood(
            va=mood_feedback(self.mood.va, appraised, cfg.evolution.mood_gain),
            day_index=self.mood.day_index,
        )
        self.day_log.append(appraised)
        label = select_response(appraised.va, cfg.affect.band_boundary)
        self._emit(t, "response", {"event_id": event_id, "label": label.value})
        prev = self.needs
        nxt = apply_event_to_needs(prev, kind, cfg.needs)
        prompts, nxt = check_thresholds(prev, nxt, cfg.needs)
        self.needs = nxt
        self._emit(t, "needs", self.needs.meters())
        self._submit(plan_response_display(label, appraised.va, cfg.display), t)
        for prompt in prompts:
            self._process_prompt(prompt, t)

    def _process_prompt(self, prompt: NeedPrompt, t: float) -> None:
        cfg = self.cfg
        self._event_seq += 1
        event_id = self._event_seq
        base = cfg.affect.need_prompt_affect[prompt.severity]
        event = AffectEvent(
            kind=EventKind.NEED_PROMPT,
            base_affect=base,
            t_ms=int(round(t)),
            need=prompt.need.value,
            severity=prompt.severity.value,
        )
        self._emit(
            t,
            "event",
            {
                "id": event_id,
                "kind": EventKind.NEED_PROMPT.value,
                "need": prompt.need.value,
                "severity": prompt.severity.value,
            },
        )
        appraised = appraise(
            event,
            self.mood.va,
            self.temperament.va,
            cfg.affect.noise_sigma,
            self.rng,
            mood_weight=cfg.affect.mood_weight,
            temperament_weight=cfg.affect.temperament_weight,
        )
        self._emit(
            t,
            "appraisal",
            {
                "event_id": event_id,
                "valence": appraised.va.valence,
                "arousal": appraised.va.arousal,
            },
        )
        self.mood = Mood(
            va=mood_feedback(self.mood.va, appraised, cfg.evolution.mood_gain),
            day_index=self.mood.day_index,
        )
        self.day_log.append(appraised)
        self._emit(t, "needs", self.needs.meters())
        self._submit(plan_need_display(prompt, cfg.display), t)

    # -- day boundaries -----------------------------------------------------

    def _process_boundary(self, t: float, day: int) -> None:
        cfg = self.cfg
        self._emit(t, "day_boundary", {"day": day})
        updated = end_of_day_update(self.temperament, self.day_log, cfg.evolution.eta)
        if updated.va != self.temperament.va:
            self.temperament = updated
            self._emit(
                t,
                "temperament",
                {
                    "day": day,
                    "valence": updated.va.valence,
                    "arousal": updated.va.arousal,
                    "archetype": updated.archetype.value,
                },
            )
        self.mood = sample_daily_mood(
            self.temperament.va, cfg.evolution.mood_range, self.rng, day
        )
        self._emit(
            t,
            "mood",
            {"day": day, "valence": self.mood.va.valence, "arousal": self.mood.va.arousal},
        )
        self.day_log = DayLog(day_index=day)
        self._emit(t, "needs", self.needs_at(t).meters())
        if self._active is None or self._active.reason is DirectiveReason.PASSIVE_MOOD:
            self._emit_passive(t)

    # -- directive queue ----------------------------------------------------

    def _activate(self, directive: DisplayDirective, t: float) -> None:
        self._active = directive
        if directive.reason is DirectiveReason.PASSIVE_MOOD:
            self._active_expiry_ms = None
        else:
            self._active_expiry_ms = t + directive.duration_ms
        self._emit(t, "directive", directive.to_wire(t))

    def _emit_passive(self, t: float) -> None:
        self._activate(
            plan_passive_display(
                self.mood.va, self.cfg.display, self.cfg.affect.band_boundary
            ),
            t,
        )

    def _submit(self, directive: DisplayDirective, t: float) -> None:
        active_reason = self._active.reason if self._active is not None else None
        if directive.reason is DirectiveReason.RESPONSE:
            if active_reason is DirectiveReason.RESPONSE:
                self._queued_responses.append(directive)
            else:
                # Preempted passive or need-prompt displays are dropped.
                self._activate(directive, t)
        elif directive.reason is DirectiveReason.NEED_PROMPT:
            if active_reason in (DirectiveReason.RESPONSE, DirectiveReason.NEED_PROMPT):
                self._queued_prompts.append(directive)
            else:
                self._activate(directive, t)
        else:
            if active_reason in (None, DirectiveReason.PASSIVE_MOOD):
                self._activate(directive, t)

    def _expire_active(self, t: float) -> None:
        self._active = None
        self._active_expiry_ms = None
        if self._queued_responses:
            self._activate(self._queued_responses.popleft(), t)
        elif self._queued_prompts:
            self._activate(self._queued_prompts.popleft(), t)
        else:
            self._emit_passive(t)
