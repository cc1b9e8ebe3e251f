import { describe, expect, it } from "vitest";

import { renderBinList, renderBinRow, renderConnection } from "../src/render.js";
import { DashboardStore } from "../src/store.js";
import { addedFrame, fullFrame } from "./fixtures.js";

function storeWith(frames: Parameters<DashboardStore["applyFrame"]>[0][]) {
  const store = new DashboardStore();
  frames.forEach((f) => store.applyFrame(f));
  return store;
}

describe("rendering", () => {
  it("renders one row per bin", () => {
    const store = storeWith([addedFrame(1, "b1"), addedFrame(2, "b2"), addedFrame(3, "b3")]);
    const html = renderBinList(store.list());
    expect(html.match(/class="bin-row"/g)?.length).toBe(3);
    for (const id of ["b1", "b2", "b3"]) expect(html).toContain(`data-bin="${id}"`);
  });

  it("shows an empty-state message for an empty registry", () => {
    expect(renderBinList([])).toContain("No bins registered yet");
  });

  it("marks exactly the full bin with the full badge", () => {
    const store = storeWith([addedFrame(1, "b1"), addedFrame(2, "b2"), fullFrame(3, "b2")]);
    const html = renderBinList(store.list());
    expect(html.match(/badge-full/g)?.length).toBe(1);
    expect(html.match(/badge-normal/g)?.length).toBe(1);
    const fullRow = html.split("bin-row").find((chunk) => chunk.includes('data-bin="b2"'));
    expect(fullRow).toContain("badge-full");
  });

  it("escapes HTML in free-text fields", () => {
    const store = storeWith([addedFrame(1, "b1")]);
    const vm = { ...store.list()[0], locate: "<script>alert(1)</script>" };
    expect(renderBinRow(vm)).not.toContain("<script>alert(1)");
  });

  it("connection banner states", () => {
    expect(renderConnection(true, false)).toContain("live");
    expect(renderConnection(false, true)).toContain("showing last known data");
  });
});
