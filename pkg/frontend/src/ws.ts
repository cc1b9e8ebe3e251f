// Event-stream connection with reconnect.  On every (re)connect the
// subscription resumes from the last applied offset, so missed frames
// are replayed by the server in order.

import type { EventFrame } from "./types.js";

export interface WebSocketLike {
  onopen: ((ev?: unknown) => void) | null;
  onclose: ((ev?: unknown) => void) | null;
  onmessage: ((ev: { data: string }) => void) | null;
  close(): void;
}

export type WsFactory = (url: string) => WebSocketLike;

const BASE_DELAY_MS = 500;
const MAX_DELAY_MS = 10_000;

export class EventStream {
  private socket: WebSocketLike | null = null;
  private attempts = 0;
  private stopped = false;
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private urlFor: (since: number) => string,
    private onFrame: (frame: EventFrame) => void,
    private lastOffset: () => number,
    private wsFactory: WsFactory,
    private onStateChange: (connected: boolean) => void = () => {},
  ) {}

  start(): void {
    this.stopped = false;
    this.connect();
  }

  stop(): void {
    this.stopped = true;
    if (this.timer !== null) clearTimeout(this.timer);
    this.socket?.close();
    this.socket = null;
  }

  private connect(): void {
    const socket = this.wsFactory(this.urlFor(this.lastOffset()));
    this.socket = socket;
    socket.onopen = () => {
      this.attempts = 0;
      this.onStateChange(true);
    };
    socket.onmessage = (ev) => {
      this.onFrame(JSON.parse(ev.data) as EventFrame);
    };
    socket.onclose = () => {
      this.onStateChange(false);
      if (this.stopped) return;
      const delay = Math.min(BASE_DELAY_MS * 2 ** this.attempts, MAX_DELAY_MS);
      this.attempts += 1;
      this.timer = setTimeout(() => this.connect(), delay);
    };
  }
}
