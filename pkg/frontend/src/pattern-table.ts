/** Pattern list table: one row per mined pattern, values copied from the
 * service document field by field.
 */

import type { PatternsDoc } from "./types.js";

export function renderPatternTable(container: HTMLElement, doc: PatternsDoc): void {
  container.replaceChildren();
  if (doc.patterns.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No frequent patterns at this threshold.";
    container.append(empty);
    return;
  }
  const table = document.createElement("table");
  table.className = "pattern-table";
  const head = document.createElement("tr");
  for (const column of ["pattern", "days", "support"]) {
    const th = document.createElement("th");
    th.textContent = column;
    head.append(th);
  }
  table.append(head);
  for (const pattern of doc.patterns) {
    const row = document.createElement("tr");
    row.className = "pattern-row";
    const cells = [
      pattern.items.join(" > "),
      String(pattern.support_count),
      pattern.support_ratio.toFixed(4),
    ];
    for (const text of cells) {
      const td = document.createElement("td");
      td.textContent = text;
      row.append(td);
    }
    table.append(row);
  }
  const caption = document.createElement("p");
  caption.className = "pattern-caption";
  caption.textContent = `${doc.patterns.length} patterns over ${doc.database_size} days at min support ${doc.min_support}`;
  container.append(table, caption);
}
