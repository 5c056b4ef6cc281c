"""Live service: a websocket front end over one engine instance.

One asyncio tick loop owns the engine.  Socket handlers only validate and
enqueue client messages; each tick applies the queue in arrival order at
the tick's simulated time, advances the engine, broadcasts directives,
and persists a snapshot at day boundaries (and again on shutdown).  Wall
clock maps to simulated time through the compression factor; every
applied input is also appended to a replayable session trace.
"""

from __future__ import annotations

import asyncio
import json
import math
import os
import time
from contextlib import asynccontextmanager, suppress
from pathlib import Path
from typing import Any, Callable

from fastapi import FastAPI, WebSocket, WebSocketDisconnect

from .affect import VAPoint
from .config import EngineConfig
from .engine import Engine
from .needs import NeedsState
from .scenario import CHANNELS, Scenario, ScenarioEntry, validate_payload

_COMPACT = {"separators": (",", ":")}


def _load_state_file(path: Path) -> dict | None:
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        temperament = VAPoint(float(data["temperament"][0]), float(data["temperament"][1]))
        needs = NeedsState(
            touch=float(data["needs"]["touch"]),
            rest=float(data["needs"]["rest"]),
            social=float(data["needs"]["social"]),
            hunger=float(data["needs"]["hunger"]),
        )
        day_index = int(data["day_index"])
    except (KeyError, IndexError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise ValueError(f"unreadable state file {path}: {exc}") from None
    return {"temperament": temperament, "needs": needs, "day_index": day_index}


class EngineService:
    """Engine owner plus client bookkeeping; all mutation happens in ticks."""

    def __init__(
        self,
        cfg: EngineConfig | None = None,
        seed: int = 0,
        *,
        state_file: Path | None = None,
        tick_hz: float = 10.0,
        compression: float = 1.0,
        wall_clock: Callable[[], float] = time.monotonic,
    ) -> None:
        if tick_hz <= 0:
            raise ValueError(f"tick_hz must be positive, got {tick_hz}")
        if compression <= 0:
            raise ValueError(f"compression must be positive, got {compression}")
        self.seed = seed
        self.state_file = state_file
        self.tick_s = 1.0 / tick_hz
        self._wall = wall_clock
        restored = _load_state_file(state_file) if state_file else None
        if restored is None:
            self.engine = Engine(cfg, seed)
        else:
            self.engine = Engine(
                cfg,
                seed,
                day_index=restored["day_index"],
                needs=restored["needs"],
                temperament=restored["temperament"],
            )
        self._compression = compression
        self._wall_ref: float | None = None
        self._sim_ref = 0.0
        self._last_broadcast_wall = 0.0
        self._inbox: list[tuple[Any, dict]] = []
        self._clients: list[WebSocket] = []
        self.trace: list[ScenarioEntry] = []

    # -- time mapping -------------------------------------------------------

    def start_clock(self) -> None:
        self._wall_ref = self._wall()
        self._sim_ref = 0.0
        self._last_broadcast_wall = self._wall_ref

    def sim_now_ms(self, wall_now: float | None = None) -> float:
        if self._wall_ref is None:
            return 0.0
        wall_now = self._wall() if wall_now is None else wall_now
        return self._sim_ref + (wall_now - self._wall_ref) * self._compression * 1000.0

    def _set_compression(self, factor: float, wall_now: float) -> None:
        self._sim_ref = self.sim_now_ms(wall_now)
        self._wall_ref = wall_now
        self._compression = factor

    # -- client message intake (validation only; no engine access) ----------

    def handle_client_text(self, client: Any, text: str) -> dict | None:
        """Validate and enqueue one raw client message.

        Returns an error message to send back, or None when accepted.
        Invalid input never reaches the engine.
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            return {"type": "error", "detail": "invalid JSON"}
        if not isinstance(data, dict):
            return {"type": "error", "detail": "message must be a JSON object"}
        msg_type = data.get("type")
        if msg_type in CHANNELS:
            payload = {k: v for k, v in data.items() if k != "type"}
            try:
                normalized = validate_payload(msg_type, payload)
            except ValueError as exc:
                return {"type": "error", "detail": str(exc)}
            self._inbox.append((client, {"type": msg_type, "payload": normalized}))
            return None
        if msg_type == "get_state":
            if set(data) != {"type"}:
                return {"type": "error", "detail": "get_state takes no other fields"}
            self._inbox.append((client, {"type": "get_state"}))
            return None
        if msg_type == "set_compression":
            factor = data.get("factor")
            if (
                set(data) != {"type", "factor"}
                or isinstance(factor, bool)
                or not isinstance(factor, (int, float))
                or factor <= 0
            ):
                return {"type": "error", "detail": "set_compression needs factor > 0"}
            self._inbox.append((client, {"type": "set_compression", "factor": float(factor)}))
            return None
        return {"type": "error", "detail": f"unknown message type {msg_type!r}"}

    # -- tick ---------------------------------------------------------------

    def process_tick(self, wall_now: float) -> list[tuple[Any, dict]]:
        """Apply queued messages, advance the engine, collect outbound
        messages as (target, message); target None broadcasts."""
        out: list[tuple[Any, dict]] = []
        sim_now = self.sim_now_ms(wall_now)
        pending, self._inbox = self._inbox, []
        for client, msg in pending:
            out.extend(self._apply_message(client, msg, sim_now, wall_now))
        # Ingests round to whole ms, which can overshoot sim_now at very
        # low compression; never ask the engine to run backwards.
        self.engine.advance_to(max(sim_now, self.engine.now_ms))
        for record in self.engine.drain_records():
            if record["type"] == "directive":
                out.append((None, {"type": "directive", "body": record["body"]}))
            elif record["type"] == "day_boundary":
                self.persist()
        if wall_now - self._last_broadcast_wall >= 1.0:
            self._last_broadcast_wall = wall_now
            out.append((None, {"type": "state", "body": self.engine.state_snapshot()}))
        return out

    def _apply_message(
        self, client: Any, msg: dict, sim_now: float, wall_now: float
    ) -> list[tuple[Any, dict]]:
        msg_type = msg["type"]
        if msg_type == "get_state":
            self.engine.advance_to(max(sim_now, self.engine.now_ms))
            return [(client, {"type": "state", "body": self.engine.state_snapshot()})]
        if msg_type == "set_compression":
            self._set_compression(msg["factor"], wall_now)
            return []
        t_ms = int(round(sim_now))
        if t_ms < self.engine.now_ms:
            t_ms = math.ceil(self.engine.now_ms)
        payload = msg["payload"]
        before = len(self.engine.records)
        if msg_type == "touch":
            self.engine.ingest_touch(payload["region"], float(t_ms))
        elif msg_type == "word":
            self.engine.ingest_word(payload["text"], float(t_ms))
        elif msg_type == "gaze":
            self.engine.ingest_gaze(payload["angle_deg"], float(t_ms))
        else:
            self.engine.ingest_proximity(payload["distance_m"], float(t_ms))
        self.trace.append(ScenarioEntry(t_ms=t_ms, channel=msg_type, payload=payload))
        kind = None
        for record in self.engine.records[before:]:
            if record["type"] == "event":
                kind = record["body"]["kind"]
                break
        return [(client, {"type": "event_ack", "kind": kind})]

    # -- persistence --------------------------------------------------------

    def persist(self) -> None:
        """Atomically write the durable snapshot, if a path is configured."""
        if self.state_file is None:
            return
        snapshot = self.engine.persistence_snapshot()
        tmp = self.state_file.with_name(self.state_file.name + ".tmp")
        tmp.write_text(json.dumps(snapshot, **_COMPACT), encoding="utf-8")
        os.replace(tmp, self.state_file)

    def session_scenario(self) -> Scenario:
        """The applied inputs so far, replayable through the harness."""
        return Scenario(seed=self.seed, entries=list(self.trace))

    # -- async plumbing -----------------------------------------------------

    async def run_loop(self) -> None:
        self.start_clock()
        while True:
            await asyncio.sleep(self.tick_s)
            await self.tick()

    async def tick(self) -> None:
        for target, message in self.process_tick(self._wall()):
            text = json.dumps(message, **_COMPACT)
            targets = list(self._clients) if target is None else [target]
            for ws in targets:
                try:
                    await ws.send_text(text)
                except Exception:
                    self._drop(ws)

    def _drop(self, ws: Any) -> None:
        if ws in self._clients:
            self._clients.remove(ws)


def create_app(service: EngineService) -> FastAPI:
    @asynccontextmanager
    async def lifespan(app: FastAPI):
        task = asyncio.create_task(service.run_loop())
        try:
            yield
        finally:
            task.cancel()
            with suppress(asyncio.CancelledError):
                await task
            service.persist()

    app = FastAPI(lifespan=lifespan)
    app.state.service = service

    @app.websocket("/ws")
    async def ws_endpoint(ws: WebSocket) -> None:
        await ws.accept()
        service._clients.append(ws)
        try:
            await ws.send_text(
                json.dumps(
                    {"type": "state", "body": service.engine.state_snapshot()},
                    **_COMPACT,
                )
            )
            while True:
                text = await ws.receive_text()
                reply = service.handle_client_text(ws, text)
                if reply is not None:
                    await ws.send_text(json.dumps(reply, **_COMPACT))
        except WebSocketDisconnect:
            pass
        finally:
            service._drop(ws)

    @app.get("/trace")
    def get_trace() -> dict:
        scenario = service.session_scenario()
        return {
            "seed": scenario.seed,
            "entries": [
                {"t_ms": e.t_ms, "channel": e.channel, "payload": e.payload}
                for e in scenario.entries
            ],
        }

    return app
