"""Command-line front door: hot-seat play, replay, self-play stats,
circuit export, and the session service.

Exit codes: 0 success, 1 usage error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import os
import socket
import sys
from pathlib import Path

from .circuit_builder import build_capture_comparator, build_game_circuit, capture_positions
from .circuits import to_qasm
from .game import Color, GameNotOver, GameState, IllegalMove
from .records import GameRecord, RecordError, load
from .render import describe_tallies, render_board
from .selfplay import POLICIES, SelfPlayConfig, run_self_play

USAGE_ERROR = 1
RUNTIME_ERROR = 2

DEFAULT_LISTEN = "127.0.0.1:8000"
DEFAULT_RECORD_DIR = "records"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="qgo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    play = sub.add_parser("play", help="hot-seat game in the terminal")
    play.add_argument("--size", type=int, default=4)
    play.add_argument("--seed", type=int, default=None)

    selfplay = sub.add_parser("selfplay", help="random-policy self-play statistics")
    selfplay.add_argument("--size", type=int, default=4)
    selfplay.add_argument("--games", type=int, default=10)
    selfplay.add_argument("--seed", type=int, default=0)
    selfplay.add_argument("--policy", default="random", choices=POLICIES)

    qasm = sub.add_parser("qasm", help="export a capture comparator or a game trace")
    qasm.add_argument("--size", type=int, default=3)
    qasm.add_argument("--pos", type=int, default=None,
                      help="interior capture position (comparator export)")
    qasm.add_argument("--color", default="B", choices=["B", "W"],
                      help="which color the comparator captures")
    qasm.add_argument("--record", default=None, help="game record to trace instead")
    qasm.add_argument("--out", default=None, help="output path (default: stdout)")

    serve = sub.add_parser("serve", help="run the HTTP/WebSocket session service")
    serve.add_argument("--listen", default=os.environ.get("QGO_LISTEN", DEFAULT_LISTEN),
                       help=f"host:port (default {DEFAULT_LISTEN}, env QGO_LISTEN)")
    serve.add_argument("--record-dir",
                       default=os.environ.get("QGO_RECORD_DIR", DEFAULT_RECORD_DIR),
                       help=f"record directory (default ./{DEFAULT_RECORD_DIR}, env QGO_RECORD_DIR)")

    rep = sub.add_parser("replay", help="replay a record file move by move")
    rep.add_argument("--record", required=True)
    return parser


# -- play -------------------------------------------------------------------


def _print_outcome(outcome) -> None:
    mark = outcome.mark.value
    print(f"box {outcome.position} collapsed to {'|1>' if outcome.bit else '|0>'} -> marked {mark}")
    for pos, color in outcome.flipped:
        print(f"entanglement fired: box {pos} flipped to {color.value}")
    for pos, color in outcome.captured:
        print(f"captured: {color.value} stone at box {pos}")


def cmd_play(args) -> int:
    seed = args.seed if args.seed is not None else int.from_bytes(os.urandom(4), "big")
    try:
        state = GameState(args.size, seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return RUNTIME_ERROR
    print(f"{args.size}x{args.size} board, seed {seed}")
    print("moves: c <pos> | q <control> <target> | p   (boxes are numbered row by row from 1)")
    while not state.game_over:
        print()
        print(render_board(state))
        if state.ledger:
            pairs = ", ".join(f"{e.control}->{e.target}" for e in state.ledger)
            print(f"pending entanglements: {pairs}")
        try:
            line = input(f"{state.to_move.value} to move> ").strip()
        except EOFError:
            print("\n(end of input) game aborted")
            return 0
        if not line:
            continue
        fields = line.split()
        numbers = fields[1:]
        if not all(f.lstrip("-").isdigit() for f in numbers):
            print("unrecognized move; use: c <pos> | q <control> <target> | p")
            continue
        try:
            if fields[0] == "c" and len(fields) == 2:
                _print_outcome(state.classical_move(int(fields[1])))
            elif fields[0] == "q" and len(fields) == 3:
                entry = state.quantum_move(int(fields[1]), int(fields[2]))
                print(f"entangled control {entry.control} -> target {entry.target} "
                      f"({'anti-CNOT' if entry.gate.value == 'acx' else 'CNOT'})")
            elif fields[0] == "p" and len(fields) == 1:
                if state.pass_move():
                    print("both players passed; game over")
                else:
                    print("pass: opponent receives one capture stone")
            else:
                print("unrecognized move; use: c <pos> | q <control> <target> | p")
        except IllegalMove as exc:
            print(f"illegal move: {exc}")
    print()
    print(render_board(state))
    print(describe_tallies(state))
    victor = state.winner()
    print("result: draw" if victor is None else f"result: {victor.value} wins")
    return 0


# -- selfplay -----------------------------------------------------------------


def cmd_selfplay(args) -> int:
    config = SelfPlayConfig(size=args.size, games=args.games, seed=args.seed,
                            policy=args.policy)
    report, _ = run_self_play(config)
    for line in report.lines():
        print(line)
    return 0


# -- qasm -----------------------------------------------------------------------


def cmd_qasm(args) -> int:
    if (args.pos is None) == (args.record is None):
        print("error: supply exactly one of --pos or --record", file=sys.stderr)
        return USAGE_ERROR
    if args.record is not None:
        circuit = build_game_circuit(load(args.record))
    else:
        if args.pos not in capture_positions(args.size):
            print(f"error: box {args.pos} is not an interior position of a "
                  f"{args.size}x{args.size} board", file=sys.stderr)
            return RUNTIME_ERROR
        circuit = build_capture_comparator(args.size, args.pos, Color(args.color))
    text = to_qasm(circuit)
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {circuit.num_qubits}-qubit circuit to {args.out}")
    return 0


# -- serve ------------------------------------------------------------------------


def _parse_listen(listen: str) -> tuple[str, int]:
    host, sep, port = listen.rpartition(":")
    if not sep or not port.isdigit():
        raise ValueError(f"listen address must be host:port, got {listen!r}")
    return host or "127.0.0.1", int(port)


def cmd_serve(args) -> int:
    try:
        host, port = _parse_listen(args.listen)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((host, port))
    except OSError as exc:
        print(f"error: cannot bind {host}:{port}: {exc}", file=sys.stderr)
        return RUNTIME_ERROR
    finally:
        probe.close()

    import uvicorn

    from .service import create_app

    app = create_app(record_dir=args.record_dir)
    print(f"serving on http://{host}:{port} (records in {args.record_dir})")
    uvicorn.run(app, host=host, port=port, log_level="warning")
    return 0


# -- replay ----------------------------------------------------------------------


def cmd_replay(args) -> int:
    record = load(args.record)
    state = GameState(record.size, record.seed)
    print(f"{record.size}x{record.size} board, seed {record.seed}, "
          f"{len(record.entries)} move(s)")
    print(render_board(state))
    for entry in record.entries:
        print()
        if entry.kind == "classical":
            outcome = state.classical_move(entry.pos, player=entry.player,
                                           forced_outcome=entry.outcome)
            print(f"move {entry.ordinal + 1}: {entry.player.value} classical on box {entry.pos}")
            _print_outcome(outcome)
        elif entry.kind == "quantum":
            state.quantum_move(entry.control, entry.target, player=entry.player)
            print(f"move {entry.ordinal + 1}: {entry.player.value} quantum "
                  f"{entry.control} -> {entry.target}")
        else:
            state.pass_move(player=entry.player)
            print(f"move {entry.ordinal + 1}: {entry.player.value} passes")
        print(render_board(state))
    print()
    print(describe_tallies(state))
    if state.game_over:
        victor = state.winner()
        print("result: draw" if victor is None else f"result: {victor.value} wins")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "play": cmd_play,
        "selfplay": cmd_selfplay,
        "qasm": cmd_qasm,
        "serve": cmd_serve,
        "replay": cmd_replay,
    }[args.command]
    try:
        return handler(args)
    except (RecordError, OSError, ValueError, IllegalMove, GameNotOver) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return RUNTIME_ERROR
    except KeyboardInterrupt:
        return 0


if __name__ == "__main__":
    sys.exit(main())
