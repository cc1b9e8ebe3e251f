// Thin fetch wrappers over the fleet HTTP API.  The server stays the
// source of truth: callers refetch after mutations instead of patching
// local state optimistically.

import type { BinRecord } from "./types.js";

export class ConflictError extends Error {}

export class FleetApi {
  constructor(
    private baseUrl: string,
    private token: string | null = null,
  ) {}

  private headers(json = false): Record<string, string> {
    const h: Record<string, string> = {};
    if (json) h["Content-Type"] = "application/json";
    if (this.token) h["Authorization"] = `Bearer ${this.token}`;
    return h;
  }

  async listBins(): Promise<BinRecord[]> {
    const resp = await fetch(`${this.baseUrl}/bins`, { headers: this.headers() });
    if (!resp.ok) throw new Error(`GET /bins failed: ${resp.status}`);
    return (await resp.json()) as BinRecord[];
  }

  async addBin(record: BinRecord): Promise<void> {
    const resp = await fetch(`${this.baseUrl}/bins`, {
      method: "POST",
      headers: this.headers(true),
      body: JSON.stringify(record),
    });
    if (resp.status === 409) {
      const body = (await resp.json()) as { detail?: string };
      throw new ConflictError(body.detail ?? `bin ${record.id} already exists`);
    }
    if (!resp.ok) throw new Error(`POST /bins failed: ${resp.status}`);
  }

  async removeBin(id: string): Promise<void> {
    const resp = await fetch(`${this.baseUrl}/bins/${encodeURIComponent(id)}`, {
      method: "DELETE",
      headers: this.headers(),
    });
    if (!resp.ok && resp.status !== 404) {
      throw new Error(`DELETE /bins/${id} failed: ${resp.status}`);
    }
  }

  eventsUrl(since: number): string {
    const ws = this.baseUrl.replace(/^http/, "ws");
    const token = this.token ? `&token=${encodeURIComponent(this.token)}` : "";
    return `${ws}/events?since=${since}${token}`;
  }
}
