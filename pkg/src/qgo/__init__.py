"""Superposed-board Go: game engine, dense simulation backend, circuit export."""

from .circuit_builder import (
    ComparatorLayout,
    Polarity,
    build_capture_comparator,
    build_game_circuit,
    capture_positions,
    capture_qubit_count,
)
from .circuits import Circuit, Gate, Measurement, Op, run_circuit, to_qasm
from .game import (
    Color,
    GameNotOver,
    GameState,
    GateFlavor,
    IllegalMove,
    MoveEntry,
    MoveOutcome,
    PendingEntanglement,
    new_game,
)
from .records import GameRecord, RecordError, replay
from .selfplay import SelfPlayConfig, SelfPlayReport, run_self_play
from .statevector import QuantumState, new_register

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "Color",
    "ComparatorLayout",
    "GameNotOver",
    "GameRecord",
    "GameState",
    "Gate",
    "GateFlavor",
    "IllegalMove",
    "Measurement",
    "MoveEntry",
    "MoveOutcome",
    "Op",
    "PendingEntanglement",
    "Polarity",
    "QuantumState",
    "RecordError",
    "SelfPlayConfig",
    "SelfPlayReport",
    "build_capture_comparator",
    "build_game_circuit",
    "capture_positions",
    "capture_qubit_count",
    "new_game",
    "new_register",
    "replay",
    "run_circuit",
    "run_self_play",
    "to_qasm",
]
