"""The superposed-board Go state machine.

Boxes start superposed.  A classical move measures a box (fair coin:
bit 1 marks Black, bit 0 marks White), resolves any pending
entanglements anchored on that box, then sweeps zero-liberty stones.
A quantum move records a pending conditional flip from a superposed
control box onto a collapsed target box: CNOT-flavoured for Black
(fires when the control collapses Black/|1>), anti-CNOT for White
(fires on White/|0>).  Passing credits the opponent one capture point,
except for the pass that ends the game; the game ends once both
players have passed consecutively with White passing last.

Positions are 1-indexed row-major (box 1 is the top-left corner), so
box p sits on qubit p-1 in the circuit picture.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum

MIN_SIZE = 2
MAX_SIZE = 19


class Color(str, Enum):
    BLACK = "B"
    WHITE = "W"

    @property
    def opponent(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK


class GateFlavor(str, Enum):
    """Which collapse of the control fires the pending flip."""

    CNOT = "cx"        # fires when the control collapses to Black / |1>
    ANTI_CNOT = "acx"  # fires when the control collapses to White / |0>


class IllegalMove(Exception):
    """A move rejected by the rules; `code` is a stable machine-readable reason."""

    def __init__(self, code: str, reason: str):
        super().__init__(reason)
        self.code = code
        self.reason = reason


class GameNotOver(Exception):
    pass


@dataclass(frozen=True)
class PendingEntanglement:
    control: int
    target: int
    gate: GateFlavor
    move_index: int


@dataclass(frozen=True)
class MoveEntry:
    """One move_log line; enough to replay the move without the RNG."""

    ordinal: int
    player: Color
    kind: str  # "classical" | "quantum" | "pass"
    pos: int | None = None
    control: int | None = None
    target: int | None = None
    outcome: int | None = None
    flipped: tuple[tuple[int, Color], ...] = ()
    captures: tuple[tuple[int, Color], ...] = ()


@dataclass(frozen=True)
class MoveOutcome:
    position: int
    bit: int
    mark: Color
    flipped: tuple[tuple[int, Color], ...]
    captured: tuple[tuple[int, Color], ...]
    game_over: bool


class GameState:
    """Single-owner game state; every mutation goes through the move methods."""

    def __init__(self, size: int, seed: int):
        if not isinstance(size, int) or not MIN_SIZE <= size <= MAX_SIZE:
            raise ValueError(f"board side must be between {MIN_SIZE} and {MAX_SIZE}, got {size!r}")
        self.size = size
        self.seed = seed
        self.boxes: list[Color | None] = [None] * (size * size)  # None = superposed
        self.ledger: list[PendingEntanglement] = []
        self.captured: dict[Color, int] = {Color.BLACK: 0, Color.WHITE: 0}  # stones of that color removed
        self.pass_bonus: dict[Color, int] = {Color.BLACK: 0, Color.WHITE: 0}  # points held by that color
        self.to_move: Color = Color.BLACK
        self.consecutive_passes = 0
        self.game_over = False
        self.move_log: list[MoveEntry] = []
        self.classical_moves = 0
        self.draws = 0
        self._rng = random.Random(seed)

    # -- geometry ---------------------------------------------------------

    def _check_pos(self, pos: int) -> None:
        if not isinstance(pos, int) or not 1 <= pos <= self.size * self.size:
            raise IllegalMove("bad_position", f"box {pos!r} is not on a {self.size}x{self.size} board")

    def neighbors(self, pos: int) -> list[int]:
        """Orthogonally adjacent box positions."""
        self._check_pos(pos)
        n = self.size
        row, col = divmod(pos - 1, n)
        out = []
        for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            r, c = row + dr, col + dc
            if 0 <= r < n and 0 <= c < n:
                out.append(r * n + c + 1)
        return out

    def liberties(self, pos: int) -> int:
        """Count of superposed (empty) orthogonal neighbors."""
        return sum(1 for p in self.neighbors(pos) if self.boxes[p - 1] is None)

    def mark(self, pos: int) -> Color | None:
        self._check_pos(pos)
        return self.boxes[pos - 1]

    # -- move legality ------------------------------------------------------

    def _require_live_turn(self, player: Color | None) -> Color:
        if self.game_over:
            raise IllegalMove("game_over", "the game is already over")
        if player is not None and player is not self.to_move:
            raise IllegalMove("out_of_turn", f"it is {self.to_move.value}'s turn")
        return self.to_move

    def legal_moves(self) -> list[tuple]:
        """Deterministically ordered legal moves: ("c", pos) | ("q", control, target) | ("p",)."""
        if self.game_over:
            return []
        moves: list[tuple] = []
        n2 = self.size * self.size
        for pos in range(1, n2 + 1):
            if self.boxes[pos - 1] is None:
                moves.append(("c", pos))
        used = {(e.control, e.target) for e in self.ledger}
        for control in range(1, n2 + 1):
            if self.boxes[control - 1] is not None:
                continue
            for target in range(1, n2 + 1):
                if self.boxes[target - 1] is None or (control, target) in used:
                    continue
                moves.append(("q", control, target))
        moves.append(("p",))
        return moves

    # -- moves ----------------------------------------------------------------

    def classical_move(self, pos: int, player: Color | None = None,
                       forced_outcome: int | None = None) -> MoveOutcome:
        """Measure a superposed box; fair coin unless `forced_outcome` replays a record."""
        mover = self._require_live_turn(player)
        self._check_pos(pos)
        if self.boxes[pos - 1] is not None:
            raise IllegalMove("already_collapsed", f"box {pos} is already collapsed")

        if forced_outcome not in (None, 0, 1):
            raise ValueError(f"forced outcome must be 0 or 1, got {forced_outcome!r}")

        # One draw per classical move, consumed even on replay so the
        # stream stays aligned with the original game.
        draw = self._rng.random()
        self.draws += 1
        bit = forced_outcome if forced_outcome is not None else (1 if draw < 0.5 else 0)
        mark = Color.BLACK if bit == 1 else Color.WHITE
        self.boxes[pos - 1] = mark
        self.classical_moves += 1

        flipped: list[tuple[int, Color]] = []
        for entry in [e for e in self.ledger if e.control == pos]:
            fires = (bit == 0) if entry.gate is GateFlavor.ANTI_CNOT else (bit == 1)
            if fires:
                new = self.boxes[entry.target - 1].opponent
                self.boxes[entry.target - 1] = new
                flipped.append((entry.target, new))
        self.ledger = [e for e in self.ledger if e.control != pos]

        captured = self.remove_captured(mover)

        self.move_log.append(MoveEntry(
            ordinal=len(self.move_log), player=mover, kind="classical", pos=pos,
            outcome=bit, flipped=tuple(flipped), captures=tuple(captured),
        ))
        self.to_move = mover.opponent
        self.consecutive_passes = 0
        return MoveOutcome(pos, bit, mark, tuple(flipped), tuple(captured), self.game_over)

    def quantum_move(self, control: int, target: int, player: Color | None = None) -> PendingEntanglement:
        """Record a pending conditional flip: superposed control onto collapsed target."""
        mover = self._require_live_turn(player)
        self._check_pos(control)
        self._check_pos(target)
        if self.boxes[control - 1] is not None:
            raise IllegalMove("control_collapsed", f"control box {control} must be superposed")
        if self.boxes[target - 1] is None:
            raise IllegalMove("target_superposed", f"target box {target} must be collapsed")
        if any(e.control == control and e.target == target for e in self.ledger):
            raise IllegalMove("duplicate_entanglement",
                              f"boxes {control} and {target} are already entangled")
        gate = GateFlavor.CNOT if mover is Color.BLACK else GateFlavor.ANTI_CNOT
        entry = PendingEntanglement(control, target, gate, len(self.move_log))
        self.ledger.append(entry)
        self.move_log.append(MoveEntry(
            ordinal=len(self.move_log), player=mover, kind="quantum",
            control=control, target=target,
        ))
        self.to_move = mover.opponent
        self.consecutive_passes = 0
        return entry

    def pass_move(self, player: Color | None = None) -> bool:
        """Pass the turn; returns True when this pass ends the game.

        A pass credits the opponent one capture point, except the pass
        that ends the game (White's closing pass is a formality to even
        out the move count, so it gives nothing away).
        """
        mover = self._require_live_turn(player)
        self.consecutive_passes += 1
        ends = self.consecutive_passes >= 2 and mover is Color.WHITE
        if ends:
            self.game_over = True
        else:
            self.pass_bonus[mover.opponent] += 1
        self.move_log.append(MoveEntry(ordinal=len(self.move_log), player=mover, kind="pass"))
        self.to_move = mover.opponent
        return ends

    # -- capture ---------------------------------------------------------------

    def _is_captured(self, pos: int, color: Color) -> bool:
        # Single-stone rule: every orthogonal neighbor collapsed and opposite.
        return all(self.boxes[p - 1] is color.opponent for p in self.neighbors(pos))

    def remove_captured(self, mover: Color) -> list[tuple[int, Color]]:
        """Sweep zero-liberty stones: opponent's first, then the mover's own.

        Runs automatically after every collapse/flip batch.  Removed
        boxes revert to superposed and any pending entanglement targeting
        them is dropped (there is no mark left to flip).
        """
        captured: list[tuple[int, Color]] = []
        for color in (mover.opponent, mover):
            doomed = [pos for pos in range(1, self.size * self.size + 1)
                      if self.boxes[pos - 1] is color and self._is_captured(pos, color)]
            for pos in doomed:
                self.boxes[pos - 1] = None
                self.captured[color] += 1
                self.ledger = [e for e in self.ledger if e.target != pos]
                captured.append((pos, color))
        return captured

    # -- scoring -----------------------------------------------------------------

    def territory(self) -> dict[Color, int]:
        """Flood-fill superposed regions; a region scores for a color iff
        every collapsed box it touches is that color (and it touches one)."""
        n = self.size
        terr = {Color.BLACK: 0, Color.WHITE: 0}
        seen = [False] * (n * n)
        for start in range(1, n * n + 1):
            if seen[start - 1] or self.boxes[start - 1] is not None:
                continue
            region = []
            border: set[Color] = set()
            stack = [start]
            seen[start - 1] = True
            while stack:
                pos = stack.pop()
                region.append(pos)
                for p in self.neighbors(pos):
                    mark = self.boxes[p - 1]
                    if mark is None:
                        if not seen[p - 1]:
                            seen[p - 1] = True
                            stack.append(p)
                    else:
                        border.add(mark)
            if len(border) == 1:
                terr[border.pop()] += len(region)
        return terr

    def score(self) -> tuple[int, int]:
        """(black_points, white_points): territory + captures + pass stones."""
        terr = self.territory()
        black = terr[Color.BLACK] + self.captured[Color.WHITE] + self.pass_bonus[Color.BLACK]
        white = terr[Color.WHITE] + self.captured[Color.BLACK] + self.pass_bonus[Color.WHITE]
        return black, white

    def winner(self) -> Color | None:
        """Winning color, or None for a draw.  Only meaningful once the game is over."""
        if not self.game_over:
            raise GameNotOver("the game is not over yet")
        black, white = self.score()
        if black > white:
            return Color.BLACK
        if white > black:
            return Color.WHITE
        return None

    # -- comparisons -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GameState):
            return NotImplemented
        return (
            self.size == other.size
            and self.seed == other.seed
            and self.boxes == other.boxes
            and self.ledger == other.ledger
            and self.captured == other.captured
            and self.pass_bonus == other.pass_bonus
            and self.to_move == other.to_move
            and self.consecutive_passes == other.consecutive_passes
            and self.game_over == other.game_over
            and self.move_log == other.move_log
            and self.classical_moves == other.classical_moves
            and self.draws == other.draws
        )

    __hash__ = None  # mutable


def new_game(size: int, seed: int) -> GameState:
    return GameState(size, seed)
