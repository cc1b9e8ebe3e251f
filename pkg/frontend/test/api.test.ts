import { createServer, type Server } from "node:http";
import { afterAll, beforeAll, beforeEach, describe, expect, it } from "vitest";

import { ConflictError, FleetApi } from "../src/api.js";
import type { BinRecord } from "../src/types.js";
import { record } from "./fixtures.js";

// Minimal fixture server speaking the fleet HTTP contract.
let bins: Map<string, BinRecord>;
let server: Server;
let baseUrl: string;

function readBody(req: import("node:http").IncomingMessage): Promise<string> {
  return new Promise((resolve) => {
    let data = "";
    req.on("data", (chunk) => (data += chunk));
    req.on("end", () => resolve(data));
  });
}

beforeAll(async () => {
  server = createServer(async (req, res) => {
    const url = req.url ?? "";
    const send = (code: number, body: unknown) => {
      res.writeHead(code, { "Content-Type": "application/json" });
      res.end(JSON.stringify(body));
    };
    if (req.method === "GET" && url === "/bins") {
      return send(200, [...bins.values()]);
    }
    if (req.method === "POST" && url === "/bins") {
      const incoming = JSON.parse(await readBody(req)) as BinRecord;
      const existing = bins.get(incoming.id);
      if (existing && existing.locate !== incoming.locate) {
        return send(409, { detail: `bin ${incoming.id} already registered with different fields` });
      }
      bins.set(incoming.id, { ...incoming, status: "normal" });
      return send(existing ? 200 : 201, { id: incoming.id, created: !existing });
    }
    if (req.method === "DELETE" && url.startsWith("/bins/")) {
      const id = decodeURIComponent(url.slice("/bins/".length));
      if (!bins.delete(id)) return send(404, { detail: "no such bin" });
      return send(200, { removed: id });
    }
    send(404, { detail: "nope" });
  });
  await new Promise<void>((resolve) => server.listen(0, "127.0.0.1", resolve));
  const addr = server.address();
  if (addr === null || typeof addr === "string") throw new Error("no port");
  baseUrl = `http://127.0.0.1:${addr.port}`;
});

afterAll(() => {
  server.close();
});

beforeEach(() => {
  bins = new Map();
});

describe("FleetApi against a fixture server", () => {
  it("lists registered bins", async () => {
    bins.set("b1", record("b1"));
    bins.set("b2", record("b2"));
    const api = new FleetApi(baseUrl);
    const listed = await api.listBins();
    expect(listed.map((b) => b.id)).toEqual(["b1", "b2"]);
  });

  it("adds a bin and sees it in the next fetch", async () => {
    const api = new FleetApi(baseUrl);
    await api.addBin(record("bin-09"));
    const listed = await api.listBins();
    expect(listed.map((b) => b.id)).toContain("bin-09");
  });

  it("surfaces a 409 as ConflictError with the server detail", async () => {
    const api = new FleetApi(baseUrl);
    await api.addBin(record("b1", { locate: "hall" }));
    await expect(api.addBin(record("b1", { locate: "yard" }))).rejects.toThrowError(
      ConflictError,
    );
  });

  it("removes a bin; the refetched list drops it", async () => {
    const api = new FleetApi(baseUrl);
    await api.addBin(record("b1"));
    await api.removeBin("b1");
    expect(await api.listBins()).toEqual([]);
  });

  it("builds the events url from the http base and offset", () => {
    const api = new FleetApi("http://example.test:9000", "sekret");
    expect(api.eventsUrl(5)).toBe("ws://example.test:9000/events?since=5&token=sekret");
  });
});
