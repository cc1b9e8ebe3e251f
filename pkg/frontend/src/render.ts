// Pure HTML rendering; main.ts injects the results into the page.

import type { BinViewModel } from "./types.js";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function levelBar(label: string, percent: number): string {
  const clamped = Math.max(0, Math.min(100, percent));
  return `<div class="level"><span class="level-label">${esc(label)}</span>` +
    `<div class="bar"><div class="bar-fill" style="width:${clamped}%"></div></div>` +
    `<span class="level-value">${clamped}%</span></div>`;
}

export function renderBinRow(vm: BinViewModel): string {
  const badge = vm.status === "full" ? "badge-full" : "badge-normal";
  const alert = vm.unreadAlert ? ` <span class="unread" data-ack="${esc(vm.id)}">●</span>` : "";
  const thumb = vm.image ? `<img class="thumb" src="${esc(vm.image)}" alt="bin">` : "";
  const heartbeat = vm.lastHeartbeat ? `last heartbeat ${esc(vm.lastHeartbeat)}` : "no heartbeat yet";
  return `<article class="bin-row" data-bin="${esc(vm.id)}">
  <header>
    <h3>${esc(vm.id)}</h3>
    <span class="badge ${badge}">${vm.status}</span>${alert}
  </header>
  ${thumb}
  <p class="locate">${esc(vm.locate)}</p>
  <p class="description">${esc(vm.description)}</p>
  ${levelBar("recyclable", vm.levels.recyclable)}
  ${levelBar("non-recyclable", vm.levels.non_recyclable)}
  <footer>
    <small>${heartbeat}</small>
    <button class="remove" data-remove="${esc(vm.id)}">remove</button>
  </footer>
</article>`;
}

export function renderBinList(bins: BinViewModel[]): string {
  if (bins.length === 0) {
    return `<p class="empty-state">No bins registered yet.</p>`;
  }
  return bins.map(renderBinRow).join("\n");
}

export function renderConnection(connected: boolean, retrying: boolean): string {
  if (connected) return `<span class="conn conn-ok">live</span>`;
  return retrying
    ? `<span class="conn conn-retry">reconnecting… showing last known data</span>`
    : `<span class="conn conn-off">offline</span>`;
}

export function renderToast(binId: string): string {
  return `<div class="toast">Bin <strong>${esc(binId)}</strong> is full</div>`;
}
