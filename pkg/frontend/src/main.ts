// Browser entry point: wires the store, API, and event stream to the DOM.

import { FleetApi, ConflictError } from "./api.js";
import { loadConfig } from "./config.js";
import { renderBinList, renderConnection, renderToast } from "./render.js";
import { DashboardStore } from "./store.js";
import type { BinRecord } from "./types.js";
import { EventStream } from "./ws.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

async function boot(): Promise<void> {
  const config = await loadConfig();
  const api = new FleetApi(config.serverUrl, config.token);

  const listEl = el<HTMLDivElement>("bin-list");
  const connEl = el<HTMLSpanElement>("connection");
  const toastsEl = el<HTMLDivElement>("toasts");
  const formEl = el<HTMLFormElement>("add-form");
  const formError = el<HTMLParagraphElement>("form-error");

  const store = new DashboardStore((binId) => {
    const wrap = document.createElement("div");
    wrap.innerHTML = renderToast(binId);
    const toast = wrap.firstElementChild as HTMLElement;
    toastsEl.appendChild(toast);
    setTimeout(() => toast.remove(), 6000);
    if ("Notification" in window && Notification.permission === "granted") {
      new Notification(`Bin ${binId} is full`);
    }
  });

  const redraw = () => {
    listEl.innerHTML = renderBinList(store.list());
  };

  const refetch = async () => {
    try {
      store.setBins(await api.listBins());
      connEl.innerHTML = renderConnection(true, false);
    } catch {
      connEl.innerHTML = renderConnection(false, true); // keep stale data visible
    }
    redraw();
  };

  const stream = new EventStream(
    (since) => api.eventsUrl(since),
    (frame) => {
      store.applyFrame(frame);
      if (store.gapDetected) {
        store.gapDetected = false;
        void refetch();
      }
      redraw();
    },
    () => store.lastOffset,
    (url) => new WebSocket(url) as unknown as import("./ws.js").WebSocketLike,
    (connected) => {
      connEl.innerHTML = renderConnection(connected, !connected);
      if (connected) void refetch();
    },
  );

  listEl.addEventListener("click", async (ev) => {
    const target = ev.target as HTMLElement;
    const removeId = target.getAttribute("data-remove");
    if (removeId) {
      await api.removeBin(removeId);
      await refetch();
    }
    const ackId = target.getAttribute("data-ack");
    if (ackId) {
      store.acknowledge(ackId);
      redraw();
    }
  });

  formEl.addEventListener("submit", async (ev) => {
    ev.preventDefault();
    const data = new FormData(formEl);
    const id = String(data.get("id") ?? "").trim();
    if (!id) {
      formError.textContent = "bin id is required";
      return;
    }
    const record: BinRecord = {
      id,
      date: new Date().toISOString(),
      locate: String(data.get("locate") ?? ""),
      status: "normal",
      description: String(data.get("description") ?? ""),
      image: null,
    };
    try {
      await api.addBin(record);
      formError.textContent = "";
      formEl.reset();
      await refetch();
    } catch (err) {
      formError.textContent =
        err instanceof ConflictError ? err.message : "could not add bin; is the server up?";
    }
  });

  if ("Notification" in window && Notification.permission === "default") {
    void Notification.requestPermission();
  }

  await refetch();
  stream.start();
}

void boot();
