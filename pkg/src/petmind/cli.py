"""Command-line interface: run scenarios, validate them, pretty-print
logs, and serve the live engine.

Exit codes: 0 success, 1 validation error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .config import ConfigError, EngineConfig, load_config
from .harness import dump_records, read_log, run, write_log
from .scenario import ScenarioError, load_scenario

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2

BIND_ENV_VAR = "PETMIND_BIND"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="petmind",
        description="Simulated companion-robot emotion engine.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="replay a scenario and emit its log")
    p_run.add_argument("scenario", help="scenario file (.scn, JSON lines)")
    p_run.add_argument("--seed", type=int, default=None, help="override scenario seed")
    p_run.add_argument(
        "--duration-ms", type=int, default=None, help="run length in simulated ms"
    )
    p_run.add_argument(
        "--compression",
        type=float,
        default=1.0,
        help="time compression factor (pacing only; outcomes are identical)",
    )
    p_run.add_argument("--config", default=None, help="JSON config overrides file")
    p_run.add_argument("--out", default=None, help="write the log here (default stdout)")

    p_validate = sub.add_parser("validate", help="check a scenario file")
    p_validate.add_argument("scenario")

    p_replay = sub.add_parser("replay", help="pretty-print a recorded log")
    p_replay.add_argument("log")

    p_serve = sub.add_parser("serve", help="serve the live engine over websocket")
    p_serve.add_argument(
        "--bind",
        default="127.0.0.1:8787",
        help=f"host:port (env {BIND_ENV_VAR} takes precedence)",
    )
    p_serve.add_argument("--tick-hz", type=float, default=10.0)
    p_serve.add_argument("--state-file", default=None, help="persistent snapshot path")
    p_serve.add_argument("--config", default=None)
    p_serve.add_argument("--seed", type=int, default=0)
    p_serve.add_argument("--compression", type=float, default=1.0)
    return parser


def _load_base_config(path: str | None) -> EngineConfig:
    if path is None:
        return EngineConfig()
    return load_config(path)


def _cmd_run(args: argparse.Namespace) -> int:
    base = _load_base_config(args.config)
    scenario = load_scenario(args.scenario)
    records = run(
        scenario,
        duration_ms=args.duration_ms,
        compression=args.compression,
        base_config=base,
        seed=args.seed,
    )
    if args.out is None:
        sys.stdout.write(dump_records(records))
    else:
        write_log(records, args.out)
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    print(f"OK: {len(scenario.entries)} entries, seed {scenario.seed}")
    return EXIT_OK


_BODY_SUMMARIES = {
    "event": lambda b: b["kind"]
    + (f" ({b['need']}/{b['severity']})" if "need" in b else ""),
    "appraisal": lambda b: (
        f"event {b['event_id']}: v={b['valence']:+.3f} a={b['arousal']:+.3f}"
    ),
    "response": lambda b: f"event {b['event_id']}: {b['label']}",
    "directive": lambda b: " ".join(
        filter(
            None,
            [
                f"{b['reason']}: face={b['face']}",
                f"aura(hue={b['aura']['hue']:.0f}, i={b['aura']['intensity']:.2f})"
                if "aura" in b
                else "",
                f"sound={b['sound']}" if "sound" in b else "",
                f"bubble={b['bubble']}" if "bubble" in b else "",
                f"for {b['duration_ms']}ms",
            ],
        )
    ),
    "needs": lambda b: " ".join(f"{k}={v:.3f}" for k, v in b.items()),
    "mood": lambda b: f"day {b['day']}: v={b['valence']:+.3f} a={b['arousal']:+.3f}",
    "temperament": lambda b: (
        f"day {b['day']}: {b['archetype']} "
        f"(v={b['valence']:+.3f} a={b['arousal']:+.3f})"
    ),
    "day_boundary": lambda b: f"day {b['day']} begins",
}


def _cmd_replay(args: argparse.Namespace) -> int:
    for record in read_log(args.log):
        try:
            t_ms = record["t_ms"]
            record_type = record["type"]
            summary = _BODY_SUMMARIES[record_type](record["body"])
        except (KeyError, TypeError):
            raise ValueError(f"malformed record: {record!r}") from None
        print(f"{t_ms / 1000.0:12.3f}s  {record_type:<12} {summary}")
    return EXIT_OK


def _parse_bind(bind: str) -> tuple[str, int]:
    host, sep, port = bind.rpartition(":")
    if not sep or not host:
        raise ValueError(f"--bind must be host:port, got {bind!r}")
    try:
        return host, int(port)
    except ValueError:
        raise ValueError(f"invalid port in {bind!r}") from None


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import EngineService, create_app

    bind = os.environ.get(BIND_ENV_VAR, args.bind)
    host, port = _parse_bind(bind)
    cfg = _load_base_config(args.config)
    service = EngineService(
        cfg=cfg,
        seed=args.seed,
        state_file=Path(args.state_file) if args.state_file else None,
        tick_hz=args.tick_hz,
        compression=args.compression,
    )
    app = create_app(service)
    uvicorn.run(app, host=host, port=port, log_level="info")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "run": _cmd_run,
        "validate": _cmd_validate,
        "replay": _cmd_replay,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ScenarioError, ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
