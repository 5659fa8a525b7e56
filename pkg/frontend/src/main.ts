/** Bootstrap: create or join a game from the query string and wire the UI.
 *
 *   /?size=3           create a fresh 3x3 game (hot-seat by default)
 *   /?game=<id>        join an existing game with an auto seat
 *   /?game=<id>&seat=W request a specific seat
 */

import { GameClient, createGame } from "./client.js";
import { MoveEntry } from "./controls.js";
import { wire, type Elements } from "./dom.js";
import type { Seat } from "./protocol.js";

function grab(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

async function start(): Promise<void> {
  const params = new URLSearchParams(window.location.search);
  const base = window.location.origin;

  let gameId = params.get("game");
  let seat: Seat | "auto";
  if (gameId) {
    seat = (params.get("seat") as Seat | null) ?? "auto";
  } else {
    const size = Number(params.get("size") ?? "4");
    gameId = await createGame(base, size);
    seat = (params.get("seat") as Seat | null) ?? "both";
    const url = new URL(window.location.href);
    url.searchParams.set("game", gameId);
    window.history.replaceState(null, "", url);
  }

  const client = new GameClient(base, gameId);
  await client.join(seat);

  // A dropped stream rejoins with the granted seat; join() re-delivers
  // the snapshot, so the board is fresh after any gap.
  client.onConnectionLost = () => {
    const rejoin = async () => {
      try {
        await client.join(client.seat ?? "auto");
      } catch {
        setTimeout(rejoin, 1000);
      }
    };
    setTimeout(rejoin, 1000);
  };

  const share = grab("share");
  const link = new URL(window.location.href);
  link.searchParams.delete("seat");
  link.searchParams.set("game", gameId);
  share.textContent = `game ${gameId} - seat ${client.seat} - invite: ${link}`;

  const elements: Elements = {
    board: grab("board") as unknown as SVGSVGElement,
    status: grab("status"),
    tallies: grab("tallies"),
    banner: grab("banner"),
    overlay: grab("overlay"),
    classicalBtn: grab("mode-classical") as HTMLButtonElement,
    quantumBtn: grab("mode-quantum") as HTMLButtonElement,
    passBtn: grab("pass") as HTMLButtonElement,
  };
  wire(client, new MoveEntry(), elements);
}

start().catch((err) => {
  grab("banner").textContent = `failed to start: ${err}`;
  grab("banner").classList.add("visible");
});
