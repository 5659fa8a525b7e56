"""Gate-list circuits, a dense executor, and OpenQASM 2.0 export.

The gate vocabulary is exactly what the game needs: H, X, plain and
anti-controlled NOT, the Toffoli pair used by the capture comparator's
work-qubit ladder, Reset, and Measure.  Anti-controls fire on |0> and
lower to X-conjugation in QASM.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum

from .statevector import QuantumState

QASM_QUBIT_CAP = 32


class Op(str, Enum):
    H = "h"
    X = "x"
    CX = "cx"
    ACX = "acx"
    CCX = "ccx"
    ACCX = "accx"
    RESET = "reset"
    MEASURE = "measure"


# Ops whose first qubit is an anti-control (fires on |0>).
ANTI_OPS = frozenset({Op.ACX, Op.ACCX})

_ARITY = {
    Op.H: 1,
    Op.X: 1,
    Op.CX: 2,
    Op.ACX: 2,
    Op.CCX: 3,
    Op.ACCX: 3,
    Op.RESET: 1,
    Op.MEASURE: 1,
}


@dataclass(frozen=True)
class Gate:
    """One circuit operation over qubit indices (and a classical bit for Measure)."""

    op: Op
    qubits: tuple[int, ...]
    bit: int | None = None


@dataclass
class Circuit:
    """Ordered gate list over a qubit register and a classical register."""

    num_qubits: int
    num_clbits: int = 0
    gates: list[Gate] = field(default_factory=list)

    def _add(self, op: Op, qubits: tuple[int, ...], bit: int | None = None) -> None:
        if len(qubits) != _ARITY[op]:
            raise ValueError(f"{op.value} takes {_ARITY[op]} qubit(s), got {qubits}")
        for q in qubits:
            if not 0 <= q < self.num_qubits:
                raise ValueError(f"qubit {q} out of range for {self.num_qubits}-qubit circuit")
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"qubit indices must be distinct, got {qubits}")
        if op is Op.MEASURE:
            if bit is None or not 0 <= bit < self.num_clbits:
                raise ValueError(f"measure needs a classical bit < {self.num_clbits}, got {bit}")
        elif bit is not None:
            raise ValueError(f"{op.value} does not take a classical bit")
        self.gates.append(Gate(op, qubits, bit))

    def h(self, q: int) -> None:
        self._add(Op.H, (q,))

    def x(self, q: int) -> None:
        self._add(Op.X, (q,))

    def cx(self, control: int, target: int) -> None:
        self._add(Op.CX, (control, target))

    def acx(self, control: int, target: int) -> None:
        self._add(Op.ACX, (control, target))

    def ccx(self, control_a: int, control_b: int, target: int) -> None:
        self._add(Op.CCX, (control_a, control_b, target))

    def accx(self, anti_control: int, control: int, target: int) -> None:
        self._add(Op.ACCX, (anti_control, control, target))

    def reset(self, q: int) -> None:
        self._add(Op.RESET, (q,))

    def measure(self, q: int, bit: int) -> None:
        self._add(Op.MEASURE, (q,), bit)

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for g in self.gates:
            out[g.op.value] = out.get(g.op.value, 0) + 1
        return out


# ---------------------------------------------------------------------------
# Execution on the dense backend


@dataclass(frozen=True)
class Measurement:
    """One realized measurement: which qubit, the bit, and that branch's probability."""

    qubit: int
    bit: int
    probability: float


def run_circuit(
    circuit: Circuit,
    rng: random.Random | None = None,
    forced_outcomes: list[int] | None = None,
) -> tuple[QuantumState, list[Measurement]]:
    """Execute a circuit on a fresh dense register.

    Measurements consume either `forced_outcomes` in gate order (the state
    is projected onto the requested branch) or one `rng` draw each; with
    neither supplied, a fixed Random(0) stream keeps the run reproducible.
    Returns the final state and the measurement log; the product of the
    logged probabilities is the probability of the realized branch.
    """
    if forced_outcomes is None and rng is None:
        rng = random.Random(0)
    state = QuantumState(circuit.num_qubits)
    log: list[Measurement] = []
    forced_iter = iter(forced_outcomes) if forced_outcomes is not None else None
    for gate in circuit.gates:
        q = gate.qubits
        if gate.op is Op.H:
            state.apply_h(q[0])
        elif gate.op is Op.X:
            state.apply_x(q[0])
        elif gate.op is Op.CX:
            state.apply_cx(q[0], q[1])
        elif gate.op is Op.ACX:
            state.apply_anticx(q[0], q[1])
        elif gate.op is Op.CCX:
            state.apply_ccx(q[0], q[1], q[2])
        elif gate.op is Op.ACCX:
            state.apply_anticcx(q[0], q[1], q[2])
        elif gate.op is Op.RESET:
            state.apply_reset(q[0])
        elif gate.op is Op.MEASURE:
            if forced_iter is not None:
                try:
                    bit = next(forced_iter)
                except StopIteration:
                    raise ValueError("forced_outcomes shorter than the circuit's measure count")
                prob = state.force_outcome(q[0], bit)
            else:
                p1 = state.prob_one(q[0])
                bit = state.measure(q[0], rng.random())
                prob = p1 if bit else 1.0 - p1
            log.append(Measurement(q[0], bit, prob))
        else:  # pragma: no cover - enum is closed
            raise ValueError(f"unsupported op kind {gate.op!r}")
    return state, log


# ---------------------------------------------------------------------------
# OpenQASM 2.0 export


def to_qasm(circuit: Circuit) -> str:
    """Lower a circuit to OpenQASM 2.0 text.

    Deterministic byte-for-byte for a given circuit.  Anti-controls lower
    to the exact X-conjugated form (`x c; cx c,t; x c`); the Toffoli pair
    uses qelib1's `ccx`.
    """
    if circuit.num_qubits > QASM_QUBIT_CAP:
        raise ValueError(
            f"circuit has {circuit.num_qubits} qubits; QASM export is capped at {QASM_QUBIT_CAP}"
        )
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";', f"qreg q[{circuit.num_qubits}];"]
    if circuit.num_clbits:
        lines.append(f"creg c[{circuit.num_clbits}];")
    for g in circuit.gates:
        q = g.qubits
        if g.op is Op.H:
            lines.append(f"h q[{q[0]}];")
        elif g.op is Op.X:
            lines.append(f"x q[{q[0]}];")
        elif g.op is Op.CX:
            lines.append(f"cx q[{q[0]}],q[{q[1]}];")
        elif g.op is Op.ACX:
            lines.append(f"x q[{q[0]}];")
            lines.append(f"cx q[{q[0]}],q[{q[1]}];")
            lines.append(f"x q[{q[0]}];")
        elif g.op is Op.CCX:
            lines.append(f"ccx q[{q[0]}],q[{q[1]}],q[{q[2]}];")
        elif g.op is Op.ACCX:
            lines.append(f"x q[{q[0]}];")
            lines.append(f"ccx q[{q[0]}],q[{q[1]}],q[{q[2]}];")
            lines.append(f"x q[{q[0]}];")
        elif g.op is Op.RESET:
            lines.append(f"reset q[{q[0]}];")
        elif g.op is Op.MEASURE:
            lines.append(f"measure q[{q[0]}] -> c[{g.bit}];")
        else:  # pragma: no cover - enum is closed
            raise ValueError(f"unsupported op kind {g.op!r}")
    return "\n".join(lines) + "\n"
