/** SVG rendering and input wiring; the only module that touches the DOM. */

import type { GameClient } from "./client.js";
import type { MoveEntry } from "./controls.js";
import { CELL, buildBoardView, type BoardView } from "./view.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface Elements {
  board: SVGSVGElement;
  status: HTMLElement;
  tallies: HTMLElement;
  banner: HTMLElement;
  overlay: HTMLElement;
  classicalBtn: HTMLButtonElement;
  quantumBtn: HTMLButtonElement;
  passBtn: HTMLButtonElement;
}

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

export function renderBoard(
  view: BoardView,
  elements: Elements,
  onBoxClick: (pos: number) => void,
): void {
  const svg = elements.board;
  svg.setAttribute("viewBox", `0 0 ${view.sizePx} ${view.sizePx}`);
  svg.replaceChildren();

  for (const arc of view.arcs) {
    svg.appendChild(
      el("path", {
        d: arc.path,
        class: `arc arc-${arc.gate}`,
        fill: "none",
        "marker-end": "url(#arrow)",
      }),
    );
  }

  for (const cell of view.cells) {
    const group = el("g", { class: "box", "data-pos": String(cell.pos) });
    const radius = CELL * 0.36;
    if (cell.kind === "superposed") {
      group.appendChild(
        el("circle", {
          cx: String(cell.x),
          cy: String(cell.y),
          r: String(radius),
          class: "superposed" + (cell.selectedAsControl ? " selected" : ""),
        }),
      );
      const label = el("text", {
        x: String(cell.x),
        y: String(cell.y),
        class: "glyph",
        "text-anchor": "middle",
        "dominant-baseline": "central",
      });
      label.textContent = "0|1";
      group.appendChild(label);
    } else {
      group.appendChild(
        el("circle", {
          cx: String(cell.x),
          cy: String(cell.y),
          r: String(radius),
          class:
            `stone stone-${cell.kind}` +
            (cell.justFlipped ? " flipped" : "") +
            (cell.selectedAsControl ? " selected" : ""),
        }),
      );
    }
    group.addEventListener("click", () => onBoxClick(cell.pos));
    svg.appendChild(group);
  }

  const defs = el("defs", {});
  const marker = el("marker", {
    id: "arrow",
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "6",
    markerHeight: "6",
    orient: "auto-start-reverse",
  });
  marker.appendChild(el("path", { d: "M 0 0 L 10 5 L 0 10 z", class: "arrow-head" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  elements.status.textContent = view.statusLine;
  elements.tallies.textContent = view.tallyLine;
  elements.banner.textContent = view.banner ?? "";
  elements.banner.classList.toggle("visible", view.banner !== null);
  elements.overlay.classList.toggle("visible", view.overlay !== null);
  if (view.overlay) {
    elements.overlay.textContent =
      `${view.overlay.winner} - B ${view.overlay.scores.B} : W ${view.overlay.scores.W}`;
  }
  for (const btn of [elements.classicalBtn, elements.quantumBtn, elements.passBtn]) {
    btn.disabled = !view.myTurn;
  }
}

export function wire(client: GameClient, entry: MoveEntry, elements: Elements): void {
  const redraw = () => {
    const snapshot = client.model.snapshot;
    if (!snapshot) return;
    const view = buildBoardView({
      snapshot,
      seat: client.seat,
      pendingControl: entry.pendingControl,
      flippedLast: client.model.flippedLast,
      rejection: client.model.lastRejection
        ? `rejected: ${client.model.lastRejection.reason}`
        : null,
    });
    renderBoard(view, elements, (pos) => {
      if (!view.myTurn) return;
      const move = entry.clickBox(pos, snapshot.to_move);
      if (move) client.sendMove(move);
      redraw(); // reflect control selection immediately (render-only state)
    });
    elements.classicalBtn.classList.toggle("active", entry.mode === "classical");
    elements.quantumBtn.classList.toggle("active", entry.mode === "quantum");
  };

  elements.classicalBtn.addEventListener("click", () => {
    entry.setMode("classical");
    redraw();
  });
  elements.quantumBtn.addEventListener("click", () => {
    entry.setMode("quantum");
    redraw();
  });
  elements.passBtn.addEventListener("click", () => {
    const snapshot = client.model.snapshot;
    if (snapshot && !snapshot.game_over) client.sendMove(entry.passMove(snapshot.to_move));
  });
  client.onEvent = () => redraw();
  redraw();
}
