/** JSON schemas of the session service, mirrored verbatim. */

export type PlayerColor = "B" | "W";
export type Seat = PlayerColor | "both" | "spectator";
export type BoxMark = "." | "B" | "W";
export type GateName = "cx" | "acx";

export interface LedgerEntry {
  control: number;
  target: number;
  gate: GateName;
}

export interface Snapshot {
  id: string;
  size: number;
  to_move: PlayerColor;
  boxes: BoxMark[];
  ledger: LedgerEntry[];
  captured_black: number;
  captured_white: number;
  pass_bonus_black: number;
  pass_bonus_white: number;
  consecutive_passes: number;
  move_count: number;
  game_over: boolean;
  scores: { B: number; W: number };
  winner: PlayerColor | "draw" | null;
}

export interface SeatMessage {
  type: "seat";
  seat: Seat;
}

export interface StateUpdateEvent {
  type: "state_update";
  snapshot: Snapshot;
}

export interface GameOverEvent {
  type: "game_over";
  scores: { B: number; W: number };
  winner: PlayerColor | "draw";
}

export interface MoveRejectedEvent {
  type: "move_rejected";
  code: string;
  reason: string;
}

export type ServerMessage =
  | SeatMessage
  | StateUpdateEvent
  | GameOverEvent
  | MoveRejectedEvent;

export type MoveBody =
  | { player: PlayerColor; kind: "classical"; pos: number }
  | { player: PlayerColor; kind: "quantum"; control: number; target: number }
  | { player: PlayerColor; kind: "pass" };
