/** Pure view-model computation: everything the SVG layer draws, as data. */

import type { Seat, Snapshot } from "./protocol.js";

export const CELL = 64; // px per box
export const MARGIN = 24;

export interface CellView {
  pos: number;
  x: number; // center
  y: number;
  kind: "superposed" | "B" | "W";
  selectedAsControl: boolean;
  justFlipped: boolean;
}

export interface ArcView {
  control: number;
  target: number;
  gate: "cx" | "acx";
  path: string; // SVG path, control curving to target
}

export interface BoardView {
  sizePx: number;
  cells: CellView[];
  arcs: ArcView[];
  statusLine: string;
  tallyLine: string;
  myTurn: boolean;
  banner: string | null;
  overlay: { winner: string; scores: { B: number; W: number } } | null;
}

export function boxCenter(size: number, pos: number): { x: number; y: number } {
  const row = Math.floor((pos - 1) / size);
  const col = (pos - 1) % size;
  return {
    x: MARGIN + col * CELL + CELL / 2,
    y: MARGIN + row * CELL + CELL / 2,
  };
}

export function arcPath(size: number, control: number, target: number): string {
  const from = boxCenter(size, control);
  const to = boxCenter(size, target);
  // Bow the arc away from the straight line so stacked pairs stay legible.
  const mx = (from.x + to.x) / 2;
  const my = (from.y + to.y) / 2;
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const norm = Math.hypot(dx, dy) || 1;
  const lift = CELL * 0.45;
  const cx = mx - (dy / norm) * lift;
  const cy = my + (dx / norm) * lift;
  return `M ${from.x} ${from.y} Q ${cx} ${cy} ${to.x} ${to.y}`;
}

export function seatAllowsMoving(seat: Seat | null, toMove: "B" | "W"): boolean {
  return seat === "both" || seat === toMove;
}

export interface ViewInputs {
  snapshot: Snapshot;
  seat: Seat | null;
  pendingControl: number | null;
  flippedLast: number[];
  rejection: string | null;
}

export function buildBoardView(inputs: ViewInputs): BoardView {
  const { snapshot, seat, pendingControl, flippedLast, rejection } = inputs;
  const n = snapshot.size;
  const cells: CellView[] = snapshot.boxes.map((mark, i) => {
    const pos = i + 1;
    const { x, y } = boxCenter(n, pos);
    return {
      pos,
      x,
      y,
      kind: mark === "." ? "superposed" : mark,
      selectedAsControl: pendingControl === pos,
      justFlipped: flippedLast.includes(pos),
    };
  });
  const arcs: ArcView[] = snapshot.ledger.map((entry) => ({
    control: entry.control,
    target: entry.target,
    gate: entry.gate,
    path: arcPath(n, entry.control, entry.target),
  }));
  const myTurn = !snapshot.game_over && seatAllowsMoving(seat, snapshot.to_move);
  const mover = snapshot.to_move === "B" ? "Black" : "White";
  const statusLine = snapshot.game_over
    ? "game over"
    : myTurn
      ? `${mover} to move (you)`
      : `${mover} to move`;
  const tallyLine =
    `B: ${snapshot.captured_white + snapshot.pass_bonus_black} captured` +
    ` | W: ${snapshot.captured_black + snapshot.pass_bonus_white} captured` +
    ` | score ${snapshot.scores.B} : ${snapshot.scores.W}`;
  const overlay =
    snapshot.game_over && snapshot.winner
      ? {
          winner:
            snapshot.winner === "draw"
              ? "Draw"
              : snapshot.winner === "B"
                ? "Black wins"
                : "White wins",
          scores: snapshot.scores,
        }
      : null;
  return {
    sizePx: 2 * MARGIN + n * CELL,
    cells,
    arcs,
    statusLine,
    tallyLine,
    myTurn,
    banner: rejection,
    overlay,
  };
}
