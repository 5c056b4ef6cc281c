"""Deterministic scenario runner: replays a scenario through a fresh
engine and returns its record log.

Simulated time alone drives every outcome, so the time-compression factor
changes wall-clock pacing only (here: nothing) and identical inputs give
byte-identical logs.
"""

from __future__ import annotations

import json
from pathlib import Path

from .config import EngineConfig, config_from_dict
from .engine import Engine
from .scenario import Scenario, ScenarioEntry


def apply_entry(engine: Engine, entry: ScenarioEntry) -> None:
    t = float(entry.t_ms)
    if entry.channel == "touch":
        engine.ingest_touch(entry.payload["region"], t)
    elif entry.channel == "word":
        engine.ingest_word(entry.payload["text"], t)
    elif entry.channel == "gaze":
        engine.ingest_gaze(entry.payload["angle_deg"], t)
    elif entry.channel == "proximity":
        engine.ingest_proximity(entry.payload["distance_m"], t)
    else:
        raise ValueError(f"unknown channel {entry.channel!r}")


def run(
    scenario: Scenario,
    duration_ms: float | None = None,
    compression: float = 1.0,
    *,
    base_config: EngineConfig | None = None,
    seed: int | None = None,
) -> list[dict]:
    """Run a scenario to duration_ms (default: its last entry time).

    ``compression`` must be positive; it exists for interface parity with
    the live service, where it scales wall clock to simulated time.
    """
    if compression <= 0:
        raise ValueError(f"compression must be positive, got {compression}")
    if duration_ms is None:
        duration_ms = float(scenario.last_t_ms())
    if duration_ms < scenario.last_t_ms():
        raise ValueError(
            f"duration_ms {duration_ms} is before the last entry "
            f"at {scenario.last_t_ms()}"
        )
    cfg = config_from_dict(scenario.config_overrides, base_config)
    engine = Engine(cfg, seed=scenario.seed if seed is None else seed)
    for entry in scenario.entries:
        apply_entry(engine, entry)
    engine.advance_to(float(duration_ms))
    return engine.records


def dump_records(records: list[dict]) -> str:
    """One compact JSON object per line; deterministic bytes."""
    return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in records)


def write_log(records: list[dict], path: str | Path) -> None:
    Path(path).write_text(dump_records(records), encoding="utf-8")


def read_log(path: str | Path) -> list[dict]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped:
                continue
            try:
                record = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise ValueError(f"line {lineno}: invalid JSON: {exc.msg}") from None
            records.append(record)
    return records
