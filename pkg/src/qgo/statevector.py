"""Dense statevector simulation of small qubit registers.

The register is a flat array of 2**m complex amplitudes.  Qubit 0 is the
least-significant bit of the amplitude index, so basis index
``i = sum(bit_q << q)``.  Every mutating operation keeps the norm at 1
(within 1e-9); measurement and reset renormalize explicitly.

A ``QuantumState`` is a single-owner object: mutate it from one logical
thread at a time.
"""

from __future__ import annotations

import math

import numpy as np

SQRT1_2 = 1.0 / math.sqrt(2.0)

# Dense amplitudes above 2**20 stop being desk-scale; larger boards are
# handled by the probabilistic game engine instead.
MAX_QUBITS = 20

_PROJECT_EPS = 1e-12


class QuantumState:
    """An m-qubit register held as 2**m complex128 amplitudes."""

    __slots__ = ("num_qubits", "amplitudes")

    def __init__(self, num_qubits: int):
        if not isinstance(num_qubits, int) or not 1 <= num_qubits <= MAX_QUBITS:
            raise ValueError(
                f"register size must be between 1 and {MAX_QUBITS} qubits, got {num_qubits!r}"
            )
        self.num_qubits = num_qubits
        self.amplitudes = np.zeros(1 << num_qubits, dtype=np.complex128)
        self.amplitudes[0] = 1.0

    def copy(self) -> "QuantumState":
        dup = object.__new__(QuantumState)
        dup.num_qubits = self.num_qubits
        dup.amplitudes = self.amplitudes.copy()
        return dup

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))

    # -- index plumbing ------------------------------------------------

    def _check(self, *qubits: int) -> None:
        for q in qubits:
            if not 0 <= q < self.num_qubits:
                raise ValueError(f"qubit index {q} out of range for {self.num_qubits} qubits")
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"qubit indices must be distinct, got {qubits}")

    def _tensor(self) -> np.ndarray:
        # Axis k of the reshaped view corresponds to qubit (m - 1 - k).
        return self.amplitudes.reshape((2,) * self.num_qubits)

    def _axis(self, q: int) -> int:
        return self.num_qubits - 1 - q

    def _halves(self, view: np.ndarray, axis: int):
        lo = [slice(None)] * view.ndim
        hi = [slice(None)] * view.ndim
        lo[axis] = 0
        hi[axis] = 1
        return tuple(lo), tuple(hi)

    def _conditional_flip(self, controls: tuple[int, ...], values: tuple[int, ...], target: int) -> None:
        """Flip `target` on basis states where each control bit equals its value."""
        self._check(*controls, target)
        view = self._tensor()
        sel = [slice(None)] * self.num_qubits
        for c, v in zip(controls, values):
            sel[self._axis(c)] = v
        sub = view[tuple(sel)]
        # Fixing control axes removes them; shift the target axis accordingly.
        t_axis = self._axis(target) - sum(1 for c in controls if self._axis(c) < self._axis(target))
        lo, hi = self._halves(sub, t_axis)
        tmp = sub[lo].copy()
        sub[lo] = sub[hi]
        sub[hi] = tmp

    # -- gates ----------------------------------------------------------

    def apply_h(self, q: int) -> None:
        """Hadamard on qubit q."""
        self._check(q)
        view = self._tensor()
        lo, hi = self._halves(view, self._axis(q))
        a0 = view[lo].copy()
        a1 = view[hi].copy()
        view[lo] = (a0 + a1) * SQRT1_2
        view[hi] = (a0 - a1) * SQRT1_2

    def apply_x(self, q: int) -> None:
        """Bit-flip on qubit q."""
        self._conditional_flip((), (), q)

    def apply_cx(self, control: int, target: int) -> None:
        """Flip target where the control bit is 1."""
        self._conditional_flip((control,), (1,), target)

    def apply_anticx(self, control: int, target: int) -> None:
        """Flip target where the control bit is 0 (X-conjugated CX)."""
        self._conditional_flip((control,), (0,), target)

    def apply_ccx(self, control_a: int, control_b: int, target: int) -> None:
        """Toffoli: flip target where both control bits are 1."""
        self._conditional_flip((control_a, control_b), (1, 1), target)

    def apply_anticcx(self, anti_control: int, control: int, target: int) -> None:
        """Toffoli variant firing on anti_control == 0 and control == 1."""
        self._conditional_flip((anti_control, control), (0, 1), target)

    def apply_reset(self, q: int) -> None:
        """Force qubit q to |0>.

        Projects onto the q=0 branch when it has nonzero probability;
        otherwise the qubit is definitely |1>, so project there and flip
        (measure-then-X semantics for the degenerate branch).
        """
        self._check(q)
        p0 = 1.0 - self.prob_one(q)
        view = self._tensor()
        lo, hi = self._halves(view, self._axis(q))
        if p0 > _PROJECT_EPS:
            view[hi] = 0.0
            self.amplitudes /= math.sqrt(p0)
        else:
            view[lo] = 0.0
            self.amplitudes /= math.sqrt(1.0 - p0)
            self.apply_x(q)

    # -- readout ----------------------------------------------------------

    def prob_one(self, q: int) -> float:
        """Probability that measuring qubit q yields 1."""
        self._check(q)
        view = self._tensor()
        _, hi = self._halves(view, self._axis(q))
        return float(np.sum(np.abs(view[hi]) ** 2))

    def measure(self, q: int, random_draw: float) -> int:
        """Projective measurement of qubit q.

        The caller supplies the uniform draw in [0, 1); the outcome is 1
        iff ``random_draw < prob_one(q)``.  The state is projected onto
        the outcome branch and renormalized, so re-measuring q returns
        the same bit for any draw.
        """
        p1 = self.prob_one(q)
        outcome = 1 if random_draw < p1 else 0
        self._project(q, outcome, p1 if outcome else 1.0 - p1)
        return outcome

    def force_outcome(self, q: int, outcome: int) -> float:
        """Project qubit q onto a required outcome; returns that branch's probability.

        Raises if the branch has (numerically) zero probability.
        """
        p1 = self.prob_one(q)
        p = p1 if outcome else 1.0 - p1
        if p < _PROJECT_EPS:
            raise ValueError(f"outcome {outcome} on qubit {q} has probability {p:.3g}")
        self._project(q, outcome, p)
        return p

    def _project(self, q: int, outcome: int, branch_prob: float) -> None:
        view = self._tensor()
        lo, hi = self._halves(view, self._axis(q))
        view[lo if outcome else hi] = 0.0
        self.amplitudes /= math.sqrt(branch_prob)


def new_register(num_qubits: int) -> QuantumState:
    """Fresh register in |0...0>."""
    return QuantumState(num_qubits)
