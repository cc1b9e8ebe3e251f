import type { DashboardConfig } from "./types.js";

const DEFAULTS: DashboardConfig = { serverUrl: "http://127.0.0.1:8765", token: null };

export async function loadConfig(url = "./config.json"): Promise<DashboardConfig> {
  try {
    const resp = await fetch(url);
    if (!resp.ok) return DEFAULTS;
    const raw = (await resp.json()) as Partial<DashboardConfig>;
    return {
      serverUrl: raw.serverUrl ?? DEFAULTS.serverUrl,
      token: raw.token ?? null,
    };
  } catch {
    return DEFAULTS;
  }
}
