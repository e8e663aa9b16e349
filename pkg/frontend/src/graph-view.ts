/** Visited-places graph rendering: one SVG circle per node (sized by singleton
 * support), one line per edge (weighted by 2-pattern support). Layout is a
 * deterministic circle; every number shown comes from the graph document.
 */

import type { GraphDoc } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface NodePosition {
  category: string;
  weight: number;
  x: number;
  y: number;
  radius: number;
}

export function layoutNodes(doc: GraphDoc, width: number, height: number): NodePosition[] {
  const cx = width / 2;
  const cy = height / 2;
  const orbit = Math.min(width, height) / 2 - 40;
  const count = doc.nodes.length;
  return doc.nodes.map((node, i) => {
    const angle = (2 * Math.PI * i) / Math.max(count, 1) - Math.PI / 2;
    return {
      category: node.category,
      weight: node.weight,
      x: count === 1 ? cx : cx + orbit * Math.cos(angle),
      y: count === 1 ? cy : cy + orbit * Math.sin(angle),
      radius: 8 + 14 * node.weight,
    };
  });
}

export function renderGraph(container: HTMLElement, doc: GraphDoc, width = 420, height = 320): void {
  container.replaceChildren();
  if (doc.nodes.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No patterns clear the current support threshold.";
    container.append(empty);
    return;
  }
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "graph-svg");

  const positions = new Map(layoutNodes(doc, width, height).map((p) => [p.category, p]));

  for (const edge of doc.edges) {
    const from = positions.get(edge.source);
    const to = positions.get(edge.target);
    if (!from || !to) continue;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("class", "graph-edge");
    line.setAttribute("x1", String(from.x));
    line.setAttribute("y1", String(from.y));
    line.setAttribute("x2", String(to.x));
    line.setAttribute("y2", String(to.y));
    line.setAttribute("stroke-width", String(1 + 4 * edge.weight));
    line.dataset.weight = String(edge.weight);
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `${edge.source} then ${edge.target} (support ${edge.weight.toFixed(2)})`;
    line.append(title);
    svg.append(line);
  }

  for (const position of positions.values()) {
    const group = document.createElementNS(SVG_NS, "g");
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("class", "graph-node");
    circle.setAttribute("cx", String(position.x));
    circle.setAttribute("cy", String(position.y));
    circle.setAttribute("r", String(position.radius));
    circle.dataset.category = position.category;
    circle.dataset.weight = String(position.weight);
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("class", "graph-label");
    label.setAttribute("x", String(position.x));
    label.setAttribute("y", String(position.y - position.radius - 6));
    label.setAttribute("text-anchor", "middle");
    label.textContent = position.category;
    group.append(circle, label);
    svg.append(group);
  }

  container.append(svg);
}
