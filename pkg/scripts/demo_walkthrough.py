#!/usr/bin/env python3
"""Scripted 4x4 exhibition: collapse, entangle, resolve, then dump the trace.

Forces the collapse outcomes so the run is reproducible without hunting
for a seed: Black collapses box 4 to B, White entangles box 2 onto it,
and the box 2 measurement decides both marks at once.
"""

import argparse

from qgo.circuit_builder import build_game_circuit
from qgo.circuits import to_qasm
from qgo.game import GameState
from qgo.records import GameRecord
from qgo.render import describe_tallies, render_board


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--control-bit", type=int, default=0, choices=[0, 1],
                        help="how the control box collapses (0 flips the target)")
    parser.add_argument("--qasm-out", default=None, help="also write the trace here")
    args = parser.parse_args()

    g = GameState(4, seed=0)
    print(render_board(g), end="\n\n")

    outcome = g.classical_move(4, forced_outcome=1)
    print(f"B measures box 4 -> marked {outcome.mark.value}")
    entry = g.quantum_move(2, 4)
    print(f"W entangles control {entry.control} -> target {entry.target} ({entry.gate.value})")
    outcome = g.classical_move(2, forced_outcome=args.control_bit)
    print(f"B measures box 2 -> marked {outcome.mark.value}; "
          f"flips: {[(p, c.value) for p, c in outcome.flipped] or 'none'}")
    print()
    print(render_board(g))
    print(describe_tallies(g))

    circuit = build_game_circuit(GameRecord.from_game(g))
    text = to_qasm(circuit)
    print(f"\ntrace: {len(circuit.gates)} gates over {circuit.num_qubits} qubits")
    if args.qasm_out:
        with open(args.qasm_out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.qasm_out}")
    else:
        print(text, end="")


if __name__ == "__main__":
    main()
