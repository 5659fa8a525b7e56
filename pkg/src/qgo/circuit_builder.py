"""Builds the two circuit families the game defines.

Game trace: Hadamards on every box qubit, then per classical move the
conditional-flip gates for the entanglements it resolves, the
measurement, and the pinning ops (Reset for White/|0>, Reset+X for
Black/|1>); captured boxes get Reset+H so they are playable again.

Capture comparator: for one interior position, a ladder of 8 shared
work qubits ANDs the 9 position controls of its 3x3 neighborhood into
a per-position flag qubit, then uncomputes.  The board contributes n^2
qubits, interior positions (n-2)^2 flags, and the ladder 8 work
qubits: n^2 + (n-2)^2 + 8 in total.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .circuits import Circuit
from .game import Color, GateFlavor
from .records import GameRecord

WORK_QUBITS = 8  # one 3x3 neighborhood has 9 controls -> 8-ancilla ladder


class Polarity(str, Enum):
    """Which measured value marks the captured stone in the comparator.

    LITERAL: capturing Black means the center read 0 and its 8 neighbors
    read 1 (and mirrored for White).  MARKING inverts that, matching the
    B=|1> / W=|0> marking convention used everywhere else.
    """

    LITERAL = "literal"
    MARKING = "marking"


def capture_qubit_count(n: int) -> int:
    """Total qubits for the n x n capture circuit: n^2 + (n-2)^2 + 8."""
    if n < 3:
        raise ValueError(f"no interior positions on a {n}x{n} board")
    return n * n + (n - 2) ** 2 + WORK_QUBITS


def capture_positions(n: int) -> list[int]:
    """The (n-2)^2 interior box positions, row-major."""
    if n < 3:
        raise ValueError(f"no interior positions on a {n}x{n} board")
    return [row * n + col + 1
            for row in range(1, n - 1)
            for col in range(1, n - 1)]


@dataclass(frozen=True)
class ComparatorLayout:
    """Qubit index map for the capture circuit of an n x n board."""

    n: int
    position_qubits: tuple[int, ...]
    work_qubits: tuple[int, ...]
    flag_qubits: tuple[int, ...]
    capture_positions: tuple[int, ...]

    @classmethod
    def for_board(cls, n: int) -> "ComparatorLayout":
        total = capture_qubit_count(n)
        n2 = n * n
        interior = tuple(capture_positions(n))
        return cls(
            n=n,
            position_qubits=tuple(range(n2)),
            work_qubits=tuple(range(n2, n2 + WORK_QUBITS)),
            flag_qubits=tuple(range(n2 + WORK_QUBITS, total)),
            capture_positions=interior,
        )

    def flag_for(self, pos: int) -> int:
        return self.flag_qubits[self.capture_positions.index(pos)]


def _neighborhood(n: int, pos: int) -> list[int]:
    """The 8 boxes surrounding an interior position, row-major."""
    row, col = divmod(pos - 1, n)
    return [r * n + c + 1
            for r in (row - 1, row, row + 1)
            for c in (col - 1, col, col + 1)
            if (r, c) != (row, col)]


def build_capture_comparator(n: int, pos: int, color: Color,
                             polarity: Polarity = Polarity.LITERAL) -> Circuit:
    """Comparator circuit flagging a captured `color` stone at `pos`.

    The 8 surrounding positions and the center form 9 controls; the
    center's required value is the capture result for `color` under
    `polarity` and the neighbors take the complement.  A work-qubit
    ladder ANDs the controls, a CX writes the flag, and the ladder is
    uncomputed so every work qubit returns to |0>.
    """
    layout = ComparatorLayout.for_board(n)
    if pos not in layout.capture_positions:
        raise ValueError(f"box {pos} is not an interior position of a {n}x{n} board")

    center_value = 0 if color is Color.BLACK else 1
    if polarity is Polarity.MARKING:
        center_value ^= 1
    center = pos - 1
    ring = [p - 1 for p in _neighborhood(n, pos)]
    work = layout.work_qubits
    flag = layout.flag_for(pos)

    circuit = Circuit(capture_qubit_count(n))
    ladder: list[tuple] = []
    if center_value == 0:
        # Neighbors are plain controls; the center joins last as the one
        # anti-control, so the pattern layer reads 8 controlled gates
        # plus a single anti-controlled gate.
        ladder.append(("ccx", ring[0], ring[1], work[0]))
        for i, q in enumerate(ring[2:]):
            ladder.append(("ccx", q, work[i], work[i + 1]))
        ladder.append(("accx", center, work[6], work[7]))
    else:
        # Mirrored convention: neighbors must read 0 (anti-controls) and
        # the center 1.
        ladder.append(("accx", ring[0], center, work[0]))
        for i, q in enumerate(ring[1:]):
            ladder.append(("accx", q, work[i], work[i + 1]))

    for kind, a, b, t in ladder:
        getattr(circuit, kind)(a, b, t)
    circuit.cx(work[7], flag)
    for kind, a, b, t in reversed(ladder):
        getattr(circuit, kind)(a, b, t)
    return circuit


def capture_pattern_holds(marks: list[int], center_index: int, ring_indexes: list[int],
                          center_value: int) -> bool:
    """Classical 8-neighbor capture predicate over basis-state bits."""
    return (marks[center_index] == center_value
            and all(marks[i] == 1 - center_value for i in ring_indexes))


def build_game_circuit(record: GameRecord) -> Circuit:
    """The full circuit trace of a recorded game.

    Pending entanglements are reconstructed from the record itself, so
    the gate for each one lands immediately before the measurement of
    its control, in creation order; entanglements whose target was
    captured first are dropped, exactly as the engine drops them.
    """
    n2 = record.size * record.size
    circuit = Circuit(n2, n2)
    for q in range(n2):
        circuit.h(q)

    pending: list[tuple[int, int, GateFlavor]] = []
    for entry in record.entries:
        if entry.kind == "quantum":
            gate = GateFlavor.CNOT if entry.player is Color.BLACK else GateFlavor.ANTI_CNOT
            pending.append((entry.control, entry.target, gate))
        elif entry.kind == "classical":
            if entry.outcome not in (0, 1):
                raise ValueError(f"entry {entry.ordinal}: classical move without an outcome bit")
            q = entry.pos - 1
            for control, target, gate in pending:
                if control != entry.pos:
                    continue
                if gate is GateFlavor.ANTI_CNOT:
                    circuit.acx(q, target - 1)
                else:
                    circuit.cx(q, target - 1)
            pending = [p for p in pending if p[0] != entry.pos]
            circuit.measure(q, q)
            circuit.reset(q)
            if entry.outcome == 1:
                circuit.x(q)
            for cap_pos, _color in entry.captures:
                circuit.reset(cap_pos - 1)
                circuit.h(cap_pos - 1)
                pending = [p for p in pending if p[1] != cap_pos]
        elif entry.kind != "pass":
            raise ValueError(f"entry {entry.ordinal}: unknown move kind {entry.kind!r}")
    return circuit
