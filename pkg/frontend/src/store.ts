// Single state store.  Every mutation goes through one reducer path, so
// the state after any frame sequence equals replaying those frames in
// offset order onto the initial fetch.

import type { BinRecord, BinViewModel, EventFrame, Levels } from "./types.js";

export type Notifier = (binId: string, offset: number) => void;

const ZERO_LEVELS: Levels = { recyclable: 0, non_recyclable: 0 };

function emptyViewModel(record: BinRecord): BinViewModel {
  return {
    ...record,
    levels: { ...ZERO_LEVELS },
    lastHeartbeat: null,
    unreadAlert: false,
  };
}

// Mirrors the server rule: a bin is full when any level reaches 100%.
function statusFromLevels(levels: Levels): "normal" | "full" {
  return levels.recyclable >= 100 || levels.non_recyclable >= 100 ? "full" : "normal";
}

export class DashboardStore {
  private bins = new Map<string, BinViewModel>();
  private order: string[] = [];
  lastOffset = 0;
  gapDetected = false;
  private notifiedOffsets = new Set<number>();

  constructor(private notify: Notifier = () => {}) {}

  list(): BinViewModel[] {
    return this.order
      .map((id) => this.bins.get(id))
      .filter((vm): vm is BinViewModel => vm !== undefined);
  }

  get(id: string): BinViewModel | undefined {
    return this.bins.get(id);
  }

  /** Replace bin records from a GET /bins fetch; live data is kept. */
  setBins(records: BinRecord[]): void {
    const next = new Map<string, BinViewModel>();
    const order: string[] = [];
    for (const record of records) {
      const prev = this.bins.get(record.id);
      next.set(record.id, prev ? { ...prev, ...record } : emptyViewModel(record));
      order.push(record.id);
    }
    this.bins = next;
    this.order = order;
  }

  acknowledge(binId: string): void {
    const vm = this.bins.get(binId);
    if (vm) vm.unreadAlert = false;
  }

  /** Apply one event frame; duplicates (offset already seen) are no-ops. */
  applyFrame(frame: EventFrame): void {
    if (frame.type === "gap") {
      this.gapDetected = true;
      return;
    }
    if (frame.offset <= this.lastOffset) return;
    this.lastOffset = frame.offset;

    const payload = frame.payload as Record<string, any>;
    switch (frame.type) {
      case "added": {
        const record = payload as unknown as BinRecord;
        if (!this.bins.has(record.id)) this.order.push(record.id);
        this.bins.set(record.id, emptyViewModel(record));
        break;
      }
      case "removed": {
        this.bins.delete(frame.bin_id);
        this.order = this.order.filter((id) => id !== frame.bin_id);
        break;
      }
      case "status": {
        const vm = this.bins.get(frame.bin_id);
        if (!vm) break;
        vm.levels = { ...vm.levels, ...(payload.levels as Levels) };
        vm.status = statusFromLevels(vm.levels);
        break;
      }
      case "full": {
        const vm = this.bins.get(frame.bin_id);
        if (!vm) break;
        vm.status = "full";
        const which = payload.bin as keyof Levels;
        vm.levels = { ...vm.levels, [which]: 100 };
        vm.unreadAlert = true;
        if (!this.notifiedOffsets.has(frame.offset)) {
          this.notifiedOffsets.add(frame.offset);
          this.notify(frame.bin_id, frame.offset);
        }
        break;
      }
      case "heartbeat": {
        const vm = this.bins.get(frame.bin_id);
        if (vm) vm.lastHeartbeat = String(payload.ts ?? "");
        break;
      }
    }
  }
}
