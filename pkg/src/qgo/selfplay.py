"""Seeded self-play with a uniform-random legal-move policy."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .circuit_builder import build_game_circuit
from .game import Color, GameState
from .records import GameRecord

POLICIES = ("random",)


@dataclass(frozen=True)
class SelfPlayConfig:
    size: int = 4
    games: int = 10
    seed: int = 0
    policy: str = "random"


@dataclass(frozen=True)
class SelfPlayReport:
    games: int
    black_wins: int
    white_wins: int
    draws: int
    mean_captures: float
    mean_moves: float
    mean_gates: float
    collapse_one_frequency: float

    def lines(self) -> list[str]:
        return [
            f"games: {self.games}",
            f"black wins: {self.black_wins}",
            f"white wins: {self.white_wins}",
            f"draws: {self.draws}",
            f"mean captures per game: {self.mean_captures:.3f}",
            f"mean moves per game: {self.mean_moves:.3f}",
            f"mean gates per game circuit: {self.mean_gates:.3f}",
            f"collapse-to-1 frequency: {self.collapse_one_frequency:.4f}",
        ]


def play_random_game(size: int, game_seed: int, policy_seed: int) -> GameState:
    """Play one game to completion, choosing uniformly among legal moves."""
    state = GameState(size, game_seed)
    policy = random.Random(policy_seed)
    while not state.game_over:
        move = policy.choice(state.legal_moves())
        if move[0] == "c":
            state.classical_move(move[1])
        elif move[0] == "q":
            state.quantum_move(move[1], move[2])
        else:
            state.pass_move()
    return state


def run_self_play(config: SelfPlayConfig) -> tuple[SelfPlayReport, list[GameState]]:
    if config.policy not in POLICIES:
        raise ValueError(f"unknown policy {config.policy!r} (choose from {POLICIES})")
    if config.games < 1:
        raise ValueError("need at least one game")

    finished: list[GameState] = []
    wins = {Color.BLACK: 0, Color.WHITE: 0}
    draws = 0
    total_captures = 0
    total_moves = 0
    total_gates = 0
    ones = 0
    collapses = 0
    for i in range(config.games):
        state = play_random_game(config.size, config.seed + 2 * i, config.seed + 2 * i + 1)
        finished.append(state)
        victor = state.winner()
        if victor is None:
            draws += 1
        else:
            wins[victor] += 1
        total_captures += state.captured[Color.BLACK] + state.captured[Color.WHITE]
        total_moves += len(state.move_log)
        total_gates += len(build_game_circuit(GameRecord.from_game(state)).gates)
        for entry in state.move_log:
            if entry.kind == "classical":
                collapses += 1
                ones += entry.outcome
    report = SelfPlayReport(
        games=config.games,
        black_wins=wins[Color.BLACK],
        white_wins=wins[Color.WHITE],
        draws=draws,
        mean_captures=total_captures / config.games,
        mean_moves=total_moves / config.games,
        mean_gates=total_gates / config.games,
        collapse_one_frequency=ones / collapses if collapses else 0.0,
    )
    return report, finished
