/** End-to-end wiring against recorded fixtures: the explorer and city view as
 * the user drives them.
 */

import { afterEach, beforeEach, describe, expect, test, vi } from "vitest";

import { startApp } from "../src/main.js";
import type { CrowdDoc, GraphDoc, PatternsDoc } from "../src/types.js";
import { FakeApi, fixture, flushMicrotasks } from "./helpers.js";

const graphDoc = fixture<GraphDoc>("user_u1_graph.json");
const patternsDoc = fixture<PatternsDoc>("user_u1_patterns.json");
const crowdDoc = fixture<CrowdDoc>("crowd_hour8.json");

function mountApp(api: FakeApi): HTMLElement {
  const root = document.createElement("div");
  document.body.append(root);
  startApp(root, api);
  return root;
}

async function openUser(root: HTMLElement): Promise<void> {
  await flushMicrotasks(); // user list load
  (root.querySelector(".user-entry") as HTMLButtonElement).click();
  await flushMicrotasks(); // graph + patterns load
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("user explorer", () => {
  test("renders node and edge counts equal to the graph document", async () => {
    const root = mountApp(new FakeApi());
    await openUser(root);
    expect(root.querySelectorAll(".graph-node")).toHaveLength(graphDoc.nodes.length);
    expect(root.querySelectorAll(".graph-edge")).toHaveLength(graphDoc.edges.length);
    expect(root.querySelectorAll(".pattern-row")).toHaveLength(patternsDoc.patterns.length);
  });

  test("user list comes from the service response", async () => {
    const root = mountApp(new FakeApi());
    await flushMicrotasks();
    const entries = [...root.querySelectorAll(".user-entry")].map((b) => b.textContent);
    expect(entries).toEqual(["u1 (60 days)", "u2 (60 days)"]);
  });
});

describe("city view", () => {
  afterEach(() => vi.useRealTimers());

  test("slider from populated to empty hour removes all cell overlays", async () => {
    vi.useFakeTimers();
    const api = new FakeApi();
    const root = mountApp(api);
    (root.querySelector(".tab-city") as HTMLButtonElement).click();
    await vi.advanceTimersByTimeAsync(200); // initial snapshot at hour 8
    expect(root.querySelectorAll(".cell-overlay")).toHaveLength(crowdDoc.cells.length);

    const slider = root.querySelector(".hour-slider") as HTMLInputElement;
    slider.value = "3";
    slider.dispatchEvent(new Event("input", { bubbles: true }));
    await vi.advanceTimersByTimeAsync(200); // debounce settles, empty snapshot lands
    expect(root.querySelectorAll(".cell-overlay")).toHaveLength(0);
    expect(root.querySelector(".panel-city .empty-state")).not.toBeNull();
  });

  test("scrubbing issues one request per settled hour value", async () => {
    vi.useFakeTimers();
    const api = new FakeApi();
    const root = mountApp(api);
    (root.querySelector(".tab-city") as HTMLButtonElement).click();
    await vi.advanceTimersByTimeAsync(200);
    api.calls.length = 0;

    const slider = root.querySelector(".hour-slider") as HTMLInputElement;
    for (const hour of ["9", "10", "11", "12"]) {
      slider.value = hour;
      slider.dispatchEvent(new Event("input", { bubbles: true }));
      await vi.advanceTimersByTimeAsync(30); // faster than the debounce window
    }
    await vi.advanceTimersByTimeAsync(300);
    expect(api.calls).toEqual(["crowd:12"]);
  });

  test("playback advances the hour cyclically through 23 back to 0", async () => {
    vi.useFakeTimers();
    const api = new FakeApi();
    const root = mountApp(api);
    (root.querySelector(".tab-city") as HTMLButtonElement).click();
    await vi.advanceTimersByTimeAsync(200);

    const slider = root.querySelector(".hour-slider") as HTMLInputElement;
    slider.value = "22";
    slider.dispatchEvent(new Event("input", { bubbles: true }));
    await vi.advanceTimersByTimeAsync(300);

    (root.querySelector(".play-toggle") as HTMLButtonElement).click();
    const seen: string[] = [];
    for (let tick = 0; tick < 3; tick++) {
      await vi.advanceTimersByTimeAsync(1500);
      seen.push((root.querySelector(".hour-value") as HTMLElement).textContent ?? "");
    }
    expect(seen).toEqual(["23:00", "00:00", "01:00"]);
    (root.querySelector(".play-toggle") as HTMLButtonElement).click(); // pause
    await vi.advanceTimersByTimeAsync(3000);
    expect((root.querySelector(".hour-value") as HTMLElement).textContent).toBe("01:00");
  });
});

describe("error handling", () => {
  test("service failure shows the banner and no stale render", async () => {
    const api = new FakeApi();
    api.listUsers = async () => {
      throw new Error("connection refused");
    };
    const root = mountApp(api);
    await flushMicrotasks();
    const banner = root.querySelector(".error-banner") as HTMLElement;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toContain("service unreachable");
    expect(root.querySelectorAll(".user-entry")).toHaveLength(0);
  });
});
