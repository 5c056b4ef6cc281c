"""Scenario files: timestamped sensor entries plus a seed and config
overrides, stored as line-delimited JSON.

An optional first line ``{"seed": ..., "config": {...}}`` (recognised by
the absence of ``t_ms``) carries run metadata; every other line is
``{"t_ms": int, "channel": "touch|word|gaze|proximity", "payload": {...}}``
with timestamps non-decreasing.  Payload schemas match the service's
client messages, so a recorded live session replays unchanged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Final

from .interactions import parse_region

CHANNELS: Final = ("touch", "word", "gaze", "proximity")


class ScenarioError(ValueError):
    """A scenario file or entry failed validation."""

    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


def validate_payload(channel: str, payload: object) -> dict:
    """Normalized payload for a channel; raises ValueError on any problem.

    Shared by scenario loading and the live service so both paths accept
    exactly the same inputs.
    """
    if channel not in CHANNELS:
        raise ValueError(f"unknown channel {channel!r}; expected one of {CHANNELS}")
    if not isinstance(payload, dict):
        raise ValueError("payload must be an object")
    if channel == "touch":
        _expect_keys(payload, {"region"})
        region = payload.get("region")
        if not isinstance(region, str):
            raise ValueError("touch payload needs a string 'region'")
        return {"region": parse_region(region).value}
    if channel == "word":
        _expect_keys(payload, {"text"})
        text = payload.get("text")
        if not isinstance(text, str) or not text.strip():
            raise ValueError("word payload needs a non-empty string 'text'")
        return {"text": text}
    if channel == "gaze":
        _expect_keys(payload, {"angle_deg"})
        angle = _number(payload.get("angle_deg"), "angle_deg")
        if not 0.0 <= angle <= 180.0:
            raise ValueError(f"angle_deg must be in [0, 180], got {angle}")
        return {"angle_deg": angle}
    _expect_keys(payload, {"distance_m"})
    distance = _number(payload.get("distance_m"), "distance_m")
    if distance < 0.0:
        raise ValueError(f"distance_m must be >= 0, got {distance}")
    return {"distance_m": distance}


def _expect_keys(payload: dict, keys: set[str]) -> None:
    extra = set(payload) - keys
    if extra:
        raise ValueError(f"unexpected payload key(s): {', '.join(sorted(extra))}")


def _number(value: object, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"{name} must be a number, got {value!r}")
    return float(value)


@dataclass(frozen=True, slots=True)
class ScenarioEntry:
    t_ms: int
    channel: str
    payload: dict


@dataclass(frozen=True, slots=True)
class Scenario:
    seed: int = 0
    config_overrides: dict = field(default_factory=dict)
    entries: list[ScenarioEntry] = field(default_factory=list)

    def last_t_ms(self) -> int:
        return self.entries[-1].t_ms if self.entries else 0


def _parse_entry(data: dict, lineno: int, prev_t: int) -> ScenarioEntry:
    extra = set(data) - {"t_ms", "channel", "payload"}
    if extra:
        raise ScenarioError(f"unexpected key(s): {', '.join(sorted(extra))}", lineno)
    t_ms = data.get("t_ms")
    if isinstance(t_ms, bool) or not isinstance(t_ms, int):
        raise ScenarioError(f"t_ms must be an integer, got {t_ms!r}", lineno)
    if t_ms < 0:
        raise ScenarioError(f"t_ms must be >= 0, got {t_ms}", lineno)
    if t_ms < prev_t:
        raise ScenarioError(
            f"t_ms {t_ms} earlier than preceding entry at {prev_t}", lineno
        )
    channel = data.get("channel")
    try:
        payload = validate_payload(channel, data.get("payload", {}))
    except ValueError as exc:
        raise ScenarioError(str(exc), lineno) from None
    return ScenarioEntry(t_ms=t_ms, channel=channel, payload=payload)


def parse_scenario(text: str) -> Scenario:
    seed = 0
    config_overrides: dict = {}
    entries: list[ScenarioEntry] = []
    prev_t = 0
    saw_line = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"invalid JSON: {exc.msg}", lineno) from None
        if not isinstance(data, dict):
            raise ScenarioError("each line must be a JSON object", lineno)
        if "t_ms" not in data and "channel" not in data:
            if saw_line:
                raise ScenarioError("metadata must be the first line", lineno)
            extra = set(data) - {"seed", "config"}
            if extra:
                raise ScenarioError(
                    f"unexpected metadata key(s): {', '.join(sorted(extra))}", lineno
                )
            if "seed" in data:
                if isinstance(data["seed"], bool) or not isinstance(data["seed"], int):
                    raise ScenarioError("seed must be an integer", lineno)
                seed = data["seed"]
            if "config" in data:
                if not isinstance(data["config"], dict):
                    raise ScenarioError("config must be an object", lineno)
                config_overrides = data["config"]
            saw_line = True
            continue
        saw_line = True
        entry = _parse_entry(data, lineno, prev_t)
        prev_t = entry.t_ms
        entries.append(entry)
    return Scenario(seed=seed, config_overrides=config_overrides, entries=entries)


def load_scenario(path: str | Path) -> Scenario:
    return parse_scenario(Path(path).read_text(encoding="utf-8"))


def dump_scenario(scenario: Scenario) -> str:
    lines = [
        json.dumps(
            {"seed": scenario.seed, "config": scenario.config_overrides},
            separators=(",", ":"),
        )
    ]
    for entry in scenario.entries:
        lines.append(
            json.dumps(
                {"t_ms": entry.t_ms, "channel": entry.channel, "payload": entry.payload},
                separators=(",", ":"),
            )
        )
    return "\n".join(lines) + "\n"


def write_scenario(scenario: Scenario, path: str | Path) -> None:
    Path(path).write_text(dump_scenario(scenario), encoding="utf-8")
