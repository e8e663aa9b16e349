import { describe, expect, test } from "vitest";

import { computeViewport, renderCellDetails, renderCityView } from "../src/city-view.js";
import type { CrowdCell, CrowdDoc } from "../src/types.js";
import { fixture } from "./helpers.js";

const populated = fixture<CrowdDoc>("crowd_hour8.json");
const empty = fixture<CrowdDoc>("crowd_hour3.json");

describe("city view", () => {
  test("renders one overlay rectangle per cell in the document", () => {
    const container = document.createElement("div");
    renderCityView(container, populated);
    expect(container.querySelectorAll(".cell-overlay")).toHaveLength(populated.cells.length);
    expect(populated.cells.length).toBeGreaterThan(0);
  });

  test("moving from a populated to an empty hour removes all overlays", () => {
    const container = document.createElement("div");
    renderCityView(container, populated);
    expect(container.querySelectorAll(".cell-overlay").length).toBeGreaterThan(0);
    renderCityView(container, empty);
    expect(container.querySelectorAll(".cell-overlay")).toHaveLength(0);
    expect(container.querySelector(".empty-state")).not.toBeNull();
  });

  test("overlay counts are copied from the document", () => {
    const container = document.createElement("div");
    renderCityView(container, populated);
    const counts = [...container.querySelectorAll(".cell-overlay")].map(
      (rect) => (rect as SVGRectElement).dataset.count,
    );
    expect(counts).toEqual(populated.cells.map((cell) => String(cell.count)));
  });

  test("clicking a cell surfaces its details", () => {
    const container = document.createElement("div");
    const details = document.createElement("div");
    let clicked: CrowdCell | null = null;
    renderCityView(container, populated, ({ cell }) => {
      clicked = cell;
      renderCellDetails(details, cell);
    });
    (container.querySelector(".cell-overlay") as SVGRectElement).dispatchEvent(
      new MouseEvent("click", { bubbles: true }),
    );
    expect(clicked).toEqual(populated.cells[0]);
    expect(details.querySelector(".cell-category")?.textContent).toContain(
      populated.cells[0]!.dominant_category as string,
    );
    const users = [...details.querySelectorAll(".cell-users li")].map((li) => li.textContent);
    expect(users).toEqual(populated.cells[0]!.users);
  });

  test("anonymized cells render no member list", () => {
    const details = document.createElement("div");
    const { users, ...anonymous } = populated.cells[0]!;
    renderCellDetails(details, anonymous as CrowdCell);
    expect(details.querySelector(".cell-users")).toBeNull();
    void users;
  });

  test("viewport pads the union of cell bounds", () => {
    const viewport = computeViewport(populated.cells);
    for (const cell of populated.cells) {
      expect(viewport.south).toBeLessThan(cell.bounds.south);
      expect(viewport.north).toBeGreaterThan(cell.bounds.north);
      expect(viewport.west).toBeLessThan(cell.bounds.west);
      expect(viewport.east).toBeGreaterThan(cell.bounds.east);
    }
  });
});
