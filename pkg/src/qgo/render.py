"""Plain-text board rendering: '.' superposed, 'B'/'W' collapsed marks."""

from __future__ import annotations

from .game import Color, GameState


def render_board(state: GameState) -> str:
    n = state.size
    width = 2 if n >= 10 else 1
    header = " " * (width + 1) + " ".join(f"{c:>{width}}" for c in range(1, n + 1))
    lines = [header]
    for row in range(n):
        cells = []
        for col in range(n):
            mark = state.boxes[row * n + col]
            cells.append(f"{'.' if mark is None else mark.value:>{width}}")
        lines.append(f"{row + 1:>{width}} " + " ".join(cells))
    return "\n".join(lines)


def describe_tallies(state: GameState) -> str:
    black, white = state.score()
    return (
        f"captured: B holds {state.captured[Color.WHITE]} W stone(s) "
        f"(+{state.pass_bonus[Color.BLACK]} pass), "
        f"W holds {state.captured[Color.BLACK]} B stone(s) "
        f"(+{state.pass_bonus[Color.WHITE]} pass); "
        f"score B {black} - W {white}"
    )
