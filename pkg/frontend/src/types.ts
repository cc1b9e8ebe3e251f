// Wire types of the fleet telemetry API.

export interface BinRecord {
  id: string;
  date: string;
  locate: string;
  status: "normal" | "full";
  description: string;
  image: string | null;
}

export type FrameType = "added" | "removed" | "status" | "full" | "heartbeat" | "gap";

export interface EventFrame {
  offset: number;
  type: FrameType;
  bin_id: string;
  payload: Record<string, unknown>;
  ts: string;
}

export interface Levels {
  recyclable: number;
  non_recyclable: number;
}

// What the UI shows per bin: the record plus live data.
export interface BinViewModel extends BinRecord {
  levels: Levels;
  lastHeartbeat: string | null;
  unreadAlert: boolean;
}

export interface DashboardConfig {
  serverUrl: string;
  token: string | null;
}
