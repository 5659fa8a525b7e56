/** Server-authoritative board mirror.
 *
 * The model only changes when a server event arrives; there are no
 * optimistic updates. `flippedLast` diffs consecutive snapshots so the
 * view can animate entanglement resolutions.
 */

import type {
  GameOverEvent,
  MoveRejectedEvent,
  ServerMessage,
  Snapshot,
} from "./protocol.js";

export class ClientBoardModel {
  snapshot: Snapshot | null = null;
  gameOver: GameOverEvent | null = null;
  lastRejection: MoveRejectedEvent | null = null;
  /** Boxes whose mark changed (not appeared/vanished) in the last update. */
  flippedLast: number[] = [];

  apply(message: ServerMessage): void {
    switch (message.type) {
      case "state_update": {
        this.flippedLast = diffFlips(this.snapshot, message.snapshot);
        this.snapshot = message.snapshot;
        this.lastRejection = null;
        break;
      }
      case "game_over":
        this.gameOver = message;
        break;
      case "move_rejected":
        this.lastRejection = message;
        break;
      case "seat":
        break;
    }
  }
}

function diffFlips(before: Snapshot | null, after: Snapshot): number[] {
  if (!before || before.boxes.length !== after.boxes.length) return [];
  const flipped: number[] = [];
  for (let i = 0; i < after.boxes.length; i++) {
    const prev = before.boxes[i];
    const next = after.boxes[i];
    if (prev !== "." && next !== "." && prev !== next) flipped.push(i + 1);
  }
  return flipped;
}
