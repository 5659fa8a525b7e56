/** Click-to-move state machine.
 *
 * Classical mode submits the clicked box; quantum mode takes a control
 * click then a target click. Legality is the server's call: doubtful
 * submissions go through and come back as move_rejected events.
 */

import type { MoveBody, PlayerColor } from "./protocol.js";

export type MoveMode = "classical" | "quantum";

export class MoveEntry {
  mode: MoveMode = "classical";
  pendingControl: number | null = null;

  setMode(mode: MoveMode): void {
    this.mode = mode;
    this.pendingControl = null;
  }

  /** Returns a move to submit, or null while a quantum move awaits its target. */
  clickBox(pos: number, player: PlayerColor): MoveBody | null {
    if (this.mode === "classical") {
      return { player, kind: "classical", pos };
    }
    if (this.pendingControl === null) {
      this.pendingControl = pos;
      return null;
    }
    if (this.pendingControl === pos) {
      this.pendingControl = null; // second click on the control cancels
      return null;
    }
    const control = this.pendingControl;
    this.pendingControl = null;
    return { player, kind: "quantum", control, target: pos };
  }

  passMove(player: PlayerColor): MoveBody {
    this.pendingControl = null;
    return { player, kind: "pass" };
  }
}
