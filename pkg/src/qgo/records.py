"""Replayable game records: a JSON-lines header plus one line per move.

The recorded outcome bits (not the seed alone) are authoritative on
replay, so records survive RNG changes.  The format is append-only and
crash-safe: a move is durable once its line is flushed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .game import Color, GameState, MoveEntry

SCHEMA_VERSION = 1


class RecordError(Exception):
    """Malformed record; `line` is the 1-based offending line number."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


@dataclass
class GameRecord:
    size: int
    seed: int
    created: str = ""
    entries: list[MoveEntry] = field(default_factory=list)

    @classmethod
    def from_game(cls, state: GameState, created: str | None = None) -> "GameRecord":
        if created is None:
            created = datetime.now(timezone.utc).isoformat(timespec="seconds")
        return cls(size=state.size, seed=state.seed, created=created,
                   entries=list(state.move_log))


def header_line(record: GameRecord) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, "size": record.size,
                       "seed": record.seed, "created": record.created},
                      separators=(",", ":"))


def entry_line(entry: MoveEntry) -> str:
    doc: dict = {"ordinal": entry.ordinal, "player": entry.player.value, "kind": entry.kind}
    if entry.kind == "classical":
        doc["pos"] = entry.pos
        doc["outcome"] = entry.outcome
        doc["flipped"] = [[pos, color.value] for pos, color in entry.flipped]
        doc["captures"] = [[pos, color.value] for pos, color in entry.captures]
    elif entry.kind == "quantum":
        doc["control"] = entry.control
        doc["target"] = entry.target
    return json.dumps(doc, separators=(",", ":"))


def dumps(record: GameRecord) -> str:
    lines = [header_line(record)]
    lines.extend(entry_line(e) for e in record.entries)
    return "\n".join(lines) + "\n"


def _parse_pairs(raw, lineno: int, key: str) -> tuple[tuple[int, Color], ...]:
    try:
        return tuple((int(pos), Color(color)) for pos, color in raw)
    except (TypeError, ValueError) as exc:
        raise RecordError(lineno, f"bad {key} list: {exc}") from exc


def loads(text: str) -> GameRecord:
    lines = [ln for ln in text.splitlines()]
    stripped = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not stripped:
        raise RecordError(1, "empty record (missing header)")

    lineno, raw = stripped[0]
    try:
        header = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise RecordError(lineno, f"invalid JSON: {exc.msg}") from exc
    if not isinstance(header, dict) or header.get("schema") != SCHEMA_VERSION:
        raise RecordError(lineno, f"unsupported or missing schema version (want {SCHEMA_VERSION})")
    try:
        record = GameRecord(size=int(header["size"]), seed=int(header["seed"]),
                            created=str(header.get("created", "")))
    except (KeyError, TypeError, ValueError) as exc:
        raise RecordError(lineno, f"bad header field: {exc}") from exc

    for lineno, raw in stripped[1:]:
        try:
            doc = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise RecordError(lineno, f"invalid JSON: {exc.msg}") from exc
        try:
            kind = doc["kind"]
            player = Color(doc["player"])
            ordinal = int(doc["ordinal"])
        except (KeyError, TypeError, ValueError) as exc:
            raise RecordError(lineno, f"bad entry field: {exc}") from exc
        if ordinal != len(record.entries):
            raise RecordError(lineno, f"ordinal {ordinal} out of order (expected {len(record.entries)})")
        if kind == "classical":
            try:
                entry = MoveEntry(
                    ordinal=ordinal, player=player, kind=kind,
                    pos=int(doc["pos"]), outcome=int(doc["outcome"]),
                    flipped=_parse_pairs(doc.get("flipped", []), lineno, "flipped"),
                    captures=_parse_pairs(doc.get("captures", []), lineno, "captures"),
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise RecordError(lineno, f"bad classical entry: {exc}") from exc
            if entry.outcome not in (0, 1):
                raise RecordError(lineno, f"outcome must be 0 or 1, got {entry.outcome}")
        elif kind == "quantum":
            try:
                entry = MoveEntry(ordinal=ordinal, player=player, kind=kind,
                                  control=int(doc["control"]), target=int(doc["target"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise RecordError(lineno, f"bad quantum entry: {exc}") from exc
        elif kind == "pass":
            entry = MoveEntry(ordinal=ordinal, player=player, kind=kind)
        else:
            raise RecordError(lineno, f"unknown move kind {kind!r}")
        record.entries.append(entry)
    return record


def replay(record: GameRecord) -> GameState:
    """Rebuild the exact final GameState by re-applying every entry.

    Classical moves are forced to their recorded outcome; everything
    downstream (flips, captures, scoring) is recomputed and must agree.
    """
    state = GameState(record.size, record.seed)
    for entry in record.entries:
        if entry.kind == "classical":
            outcome = state.classical_move(entry.pos, player=entry.player,
                                           forced_outcome=entry.outcome)
            if outcome.flipped != entry.flipped or outcome.captured != entry.captures:
                raise RecordError(entry.ordinal + 2,
                                  "replayed flips/captures disagree with the record")
        elif entry.kind == "quantum":
            state.quantum_move(entry.control, entry.target, player=entry.player)
        else:
            state.pass_move(player=entry.player)
    return state


def save(record: GameRecord, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(record))


def load(path) -> GameRecord:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())
