/** Game client: HTTP for game creation/snapshots, WebSocket for play.
 *
 * Transports are injectable so tests can run the same client under node
 * (global fetch + the `ws` package) that the browser runs natively.
 */

import { ClientBoardModel } from "./model.js";
import type { MoveBody, Seat, ServerMessage, Snapshot } from "./protocol.js";

export interface SocketLike {
  send(data: string): void;
  close(): void;
  onopen: ((ev?: unknown) => void) | null;
  onmessage: ((ev: { data: unknown }) => void) | null;
  onclose: ((ev?: unknown) => void) | null;
  onerror: ((ev?: unknown) => void) | null;
}

export interface Transports {
  fetchImpl: typeof fetch;
  makeSocket(url: string): SocketLike;
}

export function browserTransports(): Transports {
  return {
    fetchImpl: (...args) => fetch(...args),
    makeSocket: (url) => new WebSocket(url) as unknown as SocketLike,
  };
}

export class RequestError extends Error {
  constructor(
    readonly code: string,
    reason: string,
  ) {
    super(reason);
  }
}

async function readJson(response: Response): Promise<unknown> {
  const doc = (await response.json()) as Record<string, unknown>;
  if (!response.ok) {
    throw new RequestError(
      String(doc["code"] ?? response.status),
      String(doc["reason"] ?? response.statusText),
    );
  }
  return doc;
}

export async function createGame(
  baseUrl: string,
  size: number,
  seed?: number,
  transports: Transports = browserTransports(),
): Promise<string> {
  const response = await transports.fetchImpl(`${baseUrl}/games`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(seed === undefined ? { size } : { size, seed }),
  });
  const doc = (await readJson(response)) as { id: string };
  return doc.id;
}

export class GameClient {
  readonly model = new ClientBoardModel();
  seat: Seat | null = null;
  onEvent: ((message: ServerMessage) => void) | null = null;
  /** Fired when the stream drops unexpectedly (not after close()). */
  onConnectionLost: (() => void) | null = null;

  private socket: SocketLike | null = null;
  private backlog: ServerMessage[] = [];
  private waiters: ((message: ServerMessage) => void)[] = [];

  constructor(
    readonly baseUrl: string,
    readonly gameId: string,
    private readonly transports: Transports = browserTransports(),
  ) {}

  /** Open the stream; resolves after the seat handshake and first snapshot. */
  async join(seat: Seat | "auto" = "auto"): Promise<void> {
    const wsBase = this.baseUrl.replace(/^http/, "ws");
    const socket = this.transports.makeSocket(
      `${wsBase}/games/${this.gameId}/stream?seat=${seat}`,
    );
    this.socket = socket;
    await new Promise<void>((resolve, reject) => {
      socket.onerror = (err) => reject(err instanceof Error ? err : new Error("socket error"));
      socket.onopen = () => resolve();
    });
    socket.onerror = null;
    socket.onmessage = (ev) => this.receive(String(ev.data));
    socket.onclose = () => {
      // join() replaces this.socket on reconnect; only a drop of the
      // *current* socket counts as a lost connection.
      if (this.socket === socket) {
        this.socket = null;
        this.onConnectionLost?.();
      }
    };
    const seatMsg = await this.next((m) => m.type === "seat");
    this.seat = (seatMsg as { seat: Seat }).seat;
    await this.next((m) => m.type === "state_update");
  }

  private receive(raw: string): void {
    const message = JSON.parse(raw) as ServerMessage;
    if (message.type !== "seat") this.model.apply(message);
    this.onEvent?.(message);
    const waiter = this.waiters.shift();
    if (waiter) waiter(message);
    else this.backlog.push(message);
  }

  /** Next stream message satisfying the predicate (in arrival order). */
  async next(
    predicate: (message: ServerMessage) => boolean = () => true,
  ): Promise<ServerMessage> {
    for (;;) {
      const queued = this.backlog.shift();
      const message =
        queued ??
        (await new Promise<ServerMessage>((resolve) => this.waiters.push(resolve)));
      if (predicate(message)) return message;
    }
  }

  sendMove(body: MoveBody): void {
    if (!this.socket) throw new Error("join() the game before moving");
    this.socket.send(JSON.stringify(body));
  }

  async fetchSnapshot(): Promise<Snapshot> {
    const response = await this.transports.fetchImpl(
      `${this.baseUrl}/games/${this.gameId}`,
    );
    return (await readJson(response)) as Snapshot;
  }

  close(): void {
    const socket = this.socket;
    this.socket = null; // intentional: the onclose hook stays silent
    socket?.close();
  }
}
