"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with `pytest -s tests/test_acceptance.py` to see the lines.
"""

import time

import numpy as np
import pytest

from qgo.circuit_builder import (
    Polarity,
    build_capture_comparator,
    build_game_circuit,
    capture_positions,
    capture_qubit_count,
)
from qgo.circuits import Op, run_circuit, to_qasm
from qgo.game import Color, GameState
from qgo.records import GameRecord, dumps, loads, replay
from qgo.selfplay import play_random_game
from qgo.statevector import QuantumState

from equivalence import enumerate_scripts, max_distribution_gap, sample_scripts
from qasm_reader import parse_qasm

B, W = Color.BLACK, Color.WHITE


def report(name: str) -> None:
    print(f"[PASS] {name}")


def test_collapse_probability():
    start = time.monotonic()
    trials = 10_000
    ones = sum(GameState(2, seed).classical_move(1).bit for seed in range(trials))
    elapsed = time.monotonic() - start
    frequency = ones / trials
    assert 0.48 <= frequency <= 0.52
    assert elapsed < 5.0
    report(f"collapse probability: frequency {frequency:.4f} in [0.48, 0.52] "
           f"({elapsed:.2f}s)")


def test_qubit_count_formula():
    assert capture_qubit_count(3) == 18
    assert capture_qubit_count(4) == 28
    assert capture_positions(4) == [6, 7, 10, 11]
    report("qubit-count formula: 3x3 -> 18, 4x4 -> 28, interior {6,7,10,11}")


def _apply_basis_gates(state: QuantumState, circuit) -> None:
    table = {
        Op.X: state.apply_x,
        Op.CX: state.apply_cx,
        Op.CCX: state.apply_ccx,
        Op.ACCX: state.apply_anticcx,
    }
    for gate in circuit.gates:
        table[gate.op](*gate.qubits)


def _comparator_truth_table(polarity: Polarity) -> None:
    circuit = build_capture_comparator(3, 5, B, polarity)
    center_value = 0 if polarity is Polarity.LITERAL else 1
    ring = [0, 1, 2, 3, 5, 6, 7, 8]
    for pattern in range(512):
        state = QuantumState(18)
        for q in range(9):
            if (pattern >> q) & 1:
                state.apply_x(q)
        _apply_basis_gates(state, circuit)
        probs = np.abs(state.amplitudes) ** 2
        index = int(probs.argmax())
        assert probs[index] == pytest.approx(1.0, abs=1e-9)  # stays a basis state
        bits = [(index >> q) & 1 for q in range(18)]
        holds = (((pattern >> 4) & 1) == center_value
                 and all(((pattern >> q) & 1) == 1 - center_value for q in ring))
        assert bits[17] == (1 if holds else 0), f"flag wrong for input {pattern:09b}"
        assert bits[9:17] == [0] * 8, f"work qubits dirty for input {pattern:09b}"
        assert all(bits[q] == (pattern >> q) & 1 for q in range(9))


def test_comparator_brute_force():
    start = time.monotonic()
    for polarity in (Polarity.LITERAL, Polarity.MARKING):
        _comparator_truth_table(polarity)
    # The two colors build mirrored circuits; cover them structurally.
    assert build_capture_comparator(3, 5, W, Polarity.LITERAL).gates == \
        build_capture_comparator(3, 5, B, Polarity.MARKING).gates
    assert build_capture_comparator(3, 5, W, Polarity.MARKING).gates == \
        build_capture_comparator(3, 5, B, Polarity.LITERAL).gates
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    report(f"comparator brute force: 2 x 512 basis inputs on 18 qubits, "
           f"flag == classical predicate, work clean ({elapsed:.1f}s)")


def test_backend_equivalence():
    scripts = [(2, s) for s in enumerate_scripts(2, 4)]
    scripts += [(3, s) for s in sample_scripts(3, 4, 150, seed=20260810)]
    assert len(scripts) >= 200
    worst = 0.0
    for size, script in scripts:
        worst = max(worst, max_distribution_gap(size, script))
    assert worst < 1e-9
    report(f"backend equivalence: {len(scripts)} scripts on 2x2 and 3x3, "
           f"max probability gap {worst:.2e} < 1e-9")


def test_worked_example():
    for control_bit, expected in ((0, W), (1, B)):
        g = GameState(4, seed=0)
        g.classical_move(4, forced_outcome=1)
        g.quantum_move(2, 4)
        g.classical_move(2, forced_outcome=control_bit)
        assert g.mark(2) is expected
        assert g.mark(4) is expected
    report("worked example: control 0 -> both W, control 1 -> both B")


def test_gate_algebra():
    worst = 0.0
    gen = np.random.default_rng(20260810)
    for _ in range(1000):
        m = 4
        amps = gen.normal(size=1 << m) + 1j * gen.normal(size=1 << m)
        amps /= np.linalg.norm(amps)
        state = QuantumState(m)
        state.amplitudes[:] = amps
        reference = amps.copy()

        def gap(s):
            return float(np.max(np.abs(s.amplitudes - reference)))

        for do in (lambda: state.apply_h(1), lambda: state.apply_x(2),
                   lambda: state.apply_cx(0, 3), lambda: state.apply_anticx(3, 1)):
            do()
            do()
            worst = max(worst, gap(state))
            state.amplitudes[:] = reference

        conjugated = state.copy()
        state.apply_anticx(0, 2)
        conjugated.apply_x(0)
        conjugated.apply_cx(0, 2)
        conjugated.apply_x(0)
        worst = max(worst, float(np.max(np.abs(state.amplitudes - conjugated.amplitudes))))
        state.amplitudes[:] = reference
    assert worst < 1e-12
    report(f"gate algebra: involutions and anti-CX conjugation on 1000 states, "
           f"max error {worst:.2e} < 1e-12")


def test_rules_conformance():
    g = GameState(3, seed=0)
    assert g.liberties(1) == 2 and g.liberties(2) == 3 and g.liberties(5) == 4

    # Center-capture, white stone surrounded.
    g = GameState(3, seed=0)
    for pos, bit in [(5, 0), (2, 1), (4, 1), (6, 1)]:
        g.classical_move(pos, forced_outcome=bit)
    outcome = g.classical_move(8, forced_outcome=1)
    assert outcome.captured == ((5, W),)
    assert [g.mark(p) for p in (2, 4, 6, 8)] == [B, B, B, B]

    # Mirrored: black stone surrounded.
    g = GameState(3, seed=0)
    for pos, bit in [(5, 1), (2, 0), (4, 0), (6, 0)]:
        g.classical_move(pos, forced_outcome=bit)
    outcome = g.classical_move(8, forced_outcome=0)
    assert outcome.captured == ((5, B),)

    # Double pass with White last ends and scores territory + captures.
    g = GameState(3, seed=0)
    g.classical_move(5, forced_outcome=1)
    g.pass_move()                      # White: Black +1
    g.pass_move()                      # Black: White +1
    assert not g.game_over             # last passer was Black
    g.pass_move()                      # White passes last
    assert g.game_over
    assert g.score() == (9, 1)         # 8 territory + pass stone vs pass stone
    assert g.winner() is B
    report("rules conformance: liberties 2/3/4, center captures both colors, "
           "white-passes-last termination and scoring")


def test_replay_determinism():
    for i in range(100):
        game = play_random_game(3, game_seed=1000 + 2 * i, policy_seed=1001 + 2 * i)
        restored = replay(loads(dumps(GameRecord.from_game(game))))
        assert restored == game
    report("replay determinism: 100 self-play games export/reload/replay bit-identically")


def test_qasm_export():
    def build():
        g = GameState(4, seed=0)
        g.classical_move(4, forced_outcome=1)
        g.quantum_move(2, 4)
        g.classical_move(2, forced_outcome=0)
        return build_game_circuit(GameRecord.from_game(g))

    circuit = build()
    text = to_qasm(circuit)
    parsed = parse_qasm(text)
    expected: dict[str, int] = {}
    for gate in circuit.gates:
        if gate.op is Op.ACX:
            expected["x"] = expected.get("x", 0) + 2
            expected["cx"] = expected.get("cx", 0) + 1
        else:
            expected[gate.op.value] = expected.get(gate.op.value, 0) + 1
    assert dict(parsed.counts) == expected
    assert to_qasm(build()).encode() == text.encode()
    report("qasm export: worked-example trace re-parses with identical gate "
           "counts and is byte-stable")
