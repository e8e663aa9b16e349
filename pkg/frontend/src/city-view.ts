/** City map: microcells drawn as translucent rectangles from the bounds the
 * service returns, shaded by crowd count. No tile provider is required;
 * rectangles are projected linearly into the SVG viewport.
 */

import type { CrowdCell, CrowdDoc } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface Viewport {
  south: number;
  west: number;
  north: number;
  east: number;
}

/** Union of the cell bounds, padded so rectangles never hug the frame. */
export function computeViewport(cells: CrowdCell[]): Viewport {
  if (cells.length === 0) {
    return { south: 40.65, west: -74.05, north: 40.85, east: -73.85 };
  }
  let south = Infinity;
  let west = Infinity;
  let north = -Infinity;
  let east = -Infinity;
  for (const cell of cells) {
    south = Math.min(south, cell.bounds.south);
    west = Math.min(west, cell.bounds.west);
    north = Math.max(north, cell.bounds.north);
    east = Math.max(east, cell.bounds.east);
  }
  const padLat = Math.max((north - south) * 0.2, 0.005);
  const padLon = Math.max((east - west) * 0.2, 0.005);
  return { south: south - padLat, west: west - padLon, north: north + padLat, east: east + padLon };
}

export interface CellClickDetail {
  cell: CrowdCell;
}

export function renderCityView(
  container: HTMLElement,
  doc: CrowdDoc,
  onCellClick?: (detail: CellClickDetail) => void,
  width = 520,
  height = 400,
): void {
  container.replaceChildren();
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "city-svg");
  container.append(svg);

  if (doc.cells.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = `No frequent habits place anyone in the city at ${String(doc.hour_slot).padStart(2, "0")}:00.`;
    container.append(empty);
    return;
  }

  const viewport = computeViewport(doc.cells);
  const toX = (lon: number) => ((lon - viewport.west) / (viewport.east - viewport.west)) * width;
  const toY = (lat: number) => height - ((lat - viewport.south) / (viewport.north - viewport.south)) * height;
  const maxCount = Math.max(...doc.cells.map((cell) => cell.count));

  for (const cell of doc.cells) {
    const rect = document.createElementNS(SVG_NS, "rect");
    rect.setAttribute("class", "cell-overlay");
    const x = toX(cell.bounds.west);
    const y = toY(cell.bounds.north);
    rect.setAttribute("x", String(x));
    rect.setAttribute("y", String(y));
    rect.setAttribute("width", String(toX(cell.bounds.east) - x));
    rect.setAttribute("height", String(toY(cell.bounds.south) - y));
    rect.setAttribute("fill", "#c0392b");
    rect.setAttribute("fill-opacity", String(0.25 + 0.6 * (cell.count / maxCount)));
    rect.dataset.cellId = cell.cell_id;
    rect.dataset.count = String(cell.count);
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `${cell.cell_id}: ${cell.count} user(s)`;
    rect.append(title);
    if (onCellClick) {
      rect.addEventListener("click", () => onCellClick({ cell }));
    }
    svg.append(rect);
  }
}

/** Detail panel for a clicked cell; the member list is present only when the
 * service did not anonymize it. */
export function renderCellDetails(container: HTMLElement, cell: CrowdCell): void {
  container.replaceChildren();
  const heading = document.createElement("h3");
  heading.textContent = cell.cell_id;
  const category = document.createElement("p");
  category.className = "cell-category";
  category.textContent = `dominant category: ${cell.dominant_category ?? "unknown"}`;
  const count = document.createElement("p");
  count.className = "cell-count";
  count.textContent = `${cell.count} user(s) here`;
  container.append(heading, category, count);
  if (cell.users) {
    const list = document.createElement("ul");
    list.className = "cell-users";
    for (const user of cell.users) {
      const item = document.createElement("li");
      item.textContent = user;
      list.append(item);
    }
    container.append(list);
  }
}
