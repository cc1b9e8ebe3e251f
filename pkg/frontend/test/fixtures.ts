import type { BinRecord, EventFrame } from "../src/types.js";

export function record(id: string, overrides: Partial<BinRecord> = {}): BinRecord {
  return {
    id,
    date: "2025-01-01T00:00:00+00:00",
    locate: "hall",
    status: "normal",
    description: "fixture bin",
    image: null,
    ...overrides,
  };
}

export function addedFrame(offset: number, id: string): EventFrame {
  return {
    offset,
    type: "added",
    bin_id: id,
    payload: { ...record(id) },
    ts: "2025-01-01T00:00:00+00:00",
  };
}

export function statusFrame(
  offset: number,
  id: string,
  recyclable: number,
  nonRecyclable: number,
): EventFrame {
  return {
    offset,
    type: "status",
    bin_id: id,
    payload: {
      type: "status",
      seq: offset,
      levels: { recyclable, non_recyclable: nonRecyclable },
      status: "normal",
    },
    ts: "2025-01-01T00:00:01+00:00",
  };
}

export function fullFrame(offset: number, id: string, bin = "recyclable"): EventFrame {
  return {
    offset,
    type: "full",
    bin_id: id,
    payload: { type: "full", seq: offset, bin },
    ts: "2025-01-01T00:00:02+00:00",
  };
}

export function heartbeatFrame(offset: number, id: string, ts: string): EventFrame {
  return {
    offset,
    type: "heartbeat",
    bin_id: id,
    payload: { type: "heartbeat", seq: offset, ts },
    ts,
  };
}

export function removedFrame(offset: number, id: string): EventFrame {
  return { offset, type: "removed", bin_id: id, payload: {}, ts: "2025-01-01T00:00:03+00:00" };
}
