"""Multi-game session host over HTTP + WebSocket.

Every accepted move is appended to a JSON-lines record file before it
is broadcast, so a crash-and-reload from the record directory rebuilds
identical games.  Per game, moves apply strictly one at a time under an
asyncio lock; event fan-out uses unbounded per-subscriber queues so a
slow subscriber never delays the move path.
"""

from __future__ import annotations

import asyncio
import os
import secrets
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from .circuit_builder import build_game_circuit
from .circuits import to_qasm
from .game import Color, GameState, IllegalMove
from .records import GameRecord, RecordError, entry_line, header_line, load, replay

DEFAULT_RECORD_DIR = "records"


class CreateGameBody(BaseModel):
    size: int
    seed: int | None = None


class MoveBody(BaseModel):
    player: str
    kind: str
    pos: int | None = None
    control: int | None = None
    target: int | None = None


@dataclass
class GameSession:
    game_id: str
    state: GameState
    record_path: Path
    lock: asyncio.Lock = field(default_factory=asyncio.Lock)
    subscribers: list[asyncio.Queue] = field(default_factory=list)
    seats: dict[str, bool] = field(default_factory=lambda: {"B": False, "W": False})

    def snapshot(self) -> dict:
        s = self.state
        doc = {
            "id": self.game_id,
            "size": s.size,
            "to_move": s.to_move.value,
            "boxes": ["." if m is None else m.value for m in s.boxes],
            "ledger": [
                {"control": e.control, "target": e.target, "gate": e.gate.value}
                for e in s.ledger
            ],
            "captured_black": s.captured[Color.BLACK],
            "captured_white": s.captured[Color.WHITE],
            "pass_bonus_black": s.pass_bonus[Color.BLACK],
            "pass_bonus_white": s.pass_bonus[Color.WHITE],
            "consecutive_passes": s.consecutive_passes,
            "move_count": len(s.move_log),
            "game_over": s.game_over,
        }
        black, white = s.score()
        doc["scores"] = {"B": black, "W": white}
        if s.game_over:
            victor = s.winner()
            doc["winner"] = victor.value if victor else "draw"
        else:
            doc["winner"] = None
        return doc

    def state_event(self) -> dict:
        return {"type": "state_update", "snapshot": self.snapshot()}

    def game_over_event(self) -> dict:
        black, white = self.state.score()
        victor = self.state.winner()
        return {
            "type": "game_over",
            "scores": {"B": black, "W": white},
            "winner": victor.value if victor else "draw",
        }

    def broadcast(self, events: list[dict]) -> None:
        for queue in self.subscribers:
            for event in events:
                queue.put_nowait(event)


class ApiError(Exception):
    def __init__(self, status: int, code: str, reason: str):
        self.status = status
        self.code = code
        self.reason = reason


class SessionHost:
    """Owns all live games and their on-disk records."""

    def __init__(self, record_dir: str | Path):
        self.record_dir = Path(record_dir)
        self.record_dir.mkdir(parents=True, exist_ok=True)
        self.sessions: dict[str, GameSession] = {}
        for path in sorted(self.record_dir.glob("*.jsonl")):
            try:
                state = replay(load(path))
            except RecordError as exc:
                raise RecordError(exc.line, f"{path.name}: {exc.reason}") from exc
            self.sessions[path.stem] = GameSession(path.stem, state, path)

    def create_game(self, size: int, seed: int | None) -> GameSession:
        if seed is None:
            seed = secrets.randbits(32)
        try:
            state = GameState(size, seed)
        except ValueError as exc:
            raise ApiError(400, "invalid_size", str(exc))
        game_id = uuid.uuid4().hex[:12]
        path = self.record_dir / f"{game_id}.jsonl"
        session = GameSession(game_id, state, path)
        record = GameRecord.from_game(state)
        path.write_text(header_line(record) + "\n", encoding="utf-8")
        self.sessions[game_id] = session
        return session

    def get(self, game_id: str) -> GameSession:
        try:
            return self.sessions[game_id]
        except KeyError:
            raise ApiError(404, "unknown_game", f"no game with id {game_id!r}")

    async def submit_move(self, session: GameSession, body: MoveBody) -> dict:
        try:
            player = Color(body.player)
        except ValueError:
            raise ApiError(400, "bad_player", f"player must be 'B' or 'W', got {body.player!r}")
        async with session.lock:
            state = session.state
            before = len(state.move_log)
            try:
                if body.kind == "classical":
                    if body.pos is None:
                        raise ApiError(400, "bad_request", "classical move needs 'pos'")
                    outcome = state.classical_move(body.pos, player=player)
                    result = {
                        "kind": "classical",
                        "pos": outcome.position,
                        "outcome": outcome.bit,
                        "mark": outcome.mark.value,
                        "flipped": [[p, c.value] for p, c in outcome.flipped],
                        "captures": [[p, c.value] for p, c in outcome.captured],
                    }
                elif body.kind == "quantum":
                    if body.control is None or body.target is None:
                        raise ApiError(400, "bad_request", "quantum move needs 'control' and 'target'")
                    entry = state.quantum_move(body.control, body.target, player=player)
                    result = {
                        "kind": "quantum",
                        "control": entry.control,
                        "target": entry.target,
                        "gate": entry.gate.value,
                    }
                elif body.kind == "pass":
                    ended = state.pass_move(player=player)
                    result = {"kind": "pass", "ended_game": ended}
                else:
                    raise ApiError(400, "bad_request", f"unknown move kind {body.kind!r}")
            except IllegalMove as exc:
                raise ApiError(400, exc.code, exc.reason)
            # Persist before broadcasting: the record is the durable truth.
            with open(session.record_path, "a", encoding="utf-8") as fh:
                for entry in state.move_log[before:]:
                    fh.write(entry_line(entry) + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            result["player"] = player.value
            result["game_over"] = state.game_over
            events = [session.state_event()]
            if state.game_over:
                events.append(session.game_over_event())
            session.broadcast(events)
            return result

    def record_text(self, session: GameSession) -> str:
        return session.record_path.read_text(encoding="utf-8")

    def qasm_text(self, session: GameSession) -> str:
        record = GameRecord.from_game(session.state)
        return to_qasm(build_game_circuit(record))

    def grant_seat(self, session: GameSession, requested: str) -> str:
        if requested == "both":
            return "both"
        if requested in ("B", "W"):
            if session.seats[requested]:
                return "spectator"
            session.seats[requested] = True
            return requested
        for seat in ("B", "W"):  # auto: first joiner plays Black
            if not session.seats[seat]:
                session.seats[seat] = True
                return seat
        return "spectator"

    def release_seat(self, session: GameSession, seat: str) -> None:
        if seat in ("B", "W"):
            session.seats[seat] = False


def create_app(record_dir: str | Path = DEFAULT_RECORD_DIR,
               static_dir: str | Path | None = None) -> FastAPI:
    host = SessionHost(record_dir)
    app = FastAPI(title="qgo session service")
    app.state.host = host

    @app.exception_handler(ApiError)
    async def on_api_error(_request, exc: ApiError):
        return JSONResponse(status_code=exc.status,
                            content={"code": exc.code, "reason": exc.reason})

    @app.post("/games")
    async def create_game(body: CreateGameBody):
        session = host.create_game(body.size, body.seed)
        return {"id": session.game_id, "size": session.state.size,
                "seed": session.state.seed}

    @app.get("/games/{game_id}")
    async def get_state(game_id: str):
        return host.get(game_id).snapshot()

    @app.post("/games/{game_id}/moves")
    async def submit_move(game_id: str, body: MoveBody):
        session = host.get(game_id)
        return await host.submit_move(session, body)

    @app.get("/games/{game_id}/record")
    async def get_record(game_id: str):
        return PlainTextResponse(host.record_text(host.get(game_id)))

    @app.get("/games/{game_id}/qasm")
    async def get_qasm(game_id: str):
        session = host.get(game_id)
        try:
            return PlainTextResponse(host.qasm_text(session))
        except ValueError as exc:
            raise ApiError(400, "qasm_export_failed", str(exc))

    @app.websocket("/games/{game_id}/stream")
    async def stream(ws: WebSocket, game_id: str, seat: str = "auto"):
        try:
            session = host.get(game_id)
        except ApiError:
            await ws.close(code=4404)
            return
        await ws.accept()
        granted = host.grant_seat(session, seat)
        queue: asyncio.Queue = asyncio.Queue()
        session.subscribers.append(queue)
        await ws.send_json({"type": "seat", "seat": granted})
        await ws.send_json(session.state_event())
        if session.state.game_over:
            await ws.send_json(session.game_over_event())

        async def pump_events():
            while True:
                await ws.send_json(await queue.get())

        async def pump_moves():
            while True:
                try:
                    doc = await ws.receive_json()
                    body = MoveBody(**doc)
                except WebSocketDisconnect:
                    raise
                except Exception:  # malformed JSON, binary frame, bad fields
                    await ws.send_json({"type": "move_rejected", "code": "bad_request",
                                        "reason": "malformed move body"})
                    continue
                if granted not in ("both", body.player):
                    await ws.send_json({"type": "move_rejected", "code": "wrong_seat",
                                        "reason": f"this connection holds seat {granted!r}"})
                    continue
                try:
                    await host.submit_move(session, body)
                except ApiError as exc:
                    await ws.send_json({"type": "move_rejected", "code": exc.code,
                                        "reason": exc.reason})

        sender = asyncio.create_task(pump_events())
        try:
            await pump_moves()
        except WebSocketDisconnect:
            pass
        finally:
            sender.cancel()
            try:
                await sender
            except (asyncio.CancelledError, Exception):
                pass
            session.subscribers.remove(queue)
            host.release_seat(session, granted)

    if static_dir is None:
        static_dir = os.environ.get("QGO_STATIC_DIR", "frontend/dist")
    static_path = Path(static_dir)
    if static_path.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_path, html=True), name="ui")
    return app
