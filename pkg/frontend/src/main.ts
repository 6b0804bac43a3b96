/**
 * DOM wiring for the explorer page. All state lives in ExplorerSession;
 * this module renders snapshots and forwards control events.
 */

import { ApiClient, Params } from "./api.js";
import { ExplorerSession, SessionSnapshot } from "./session.js";
import { buildTableView, errorBanner } from "./view.js";

const CANDIDATE_PRESETS: Record<string, number> = {
  Croatia: 4425747,
  Iceland: 317630,
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function render(snapshot: SessionSnapshot): void {
  const banner = el<HTMLDivElement>("banner");
  const message = errorBanner(snapshot);
  banner.textContent = message ?? "";
  banner.hidden = message === null;

  const table = el<HTMLTableElement>("results");
  const view = buildTableView(snapshot);
  const body = el<HTMLTableSectionElement>("results-body");
  body.replaceChildren();
  table.hidden = view === null;
  if (!view) return;

  for (const row of view.rows) {
    const tr = document.createElement("tr");
    if (row.dpFlagged) tr.classList.add("dp-violation");
    if (row.capped) tr.classList.add("capped");
    const deltaText =
      row.deltaArrow === "new"
        ? "new"
        : row.delta === null
          ? ""
          : `${row.deltaArrow} ${row.delta > 0 ? "+" : ""}${row.delta}`;
    const cells = [
      String(row.rank),
      row.name,
      row.population.toLocaleString("en-US"),
      String(row.seats),
      deltaText,
      row.ratioBefore,
      row.ratioAfter,
    ];
    cells.forEach((text, i) => {
      const td = document.createElement("td");
      td.textContent = text;
      if (i === 5) td.title = `${row.exactBefore.num}/${row.exactBefore.den}`;
      if (i === 6) td.title = `${row.exactAfter.num}/${row.exactAfter.den}`;
      tr.appendChild(td);
    });
    body.appendChild(tr);
  }

  el<HTMLSpanElement>("total-seats").textContent = String(view.totalSeats);
  el<HTMLSpanElement>("divisor-interval").textContent = view.intervalText;
  el<HTMLSpanElement>("dp-status").textContent = view.satisfiesDp
    ? `satisfied (post-rounding inversions: ${view.dpFlagged.join(", ") || "none"})`
    : "violated";
}

function readParams(): Partial<Params> {
  return {
    base: el<HTMLInputElement>("base").value,
    max_cap: Number(el<HTMLInputElement>("max-cap").value) || null,
    house_size: Number(el<HTMLInputElement>("house").value),
    rounding: el<HTMLSelectElement>("rounding").value as Params["rounding"],
  };
}

export function boot(baseUrl: string): ExplorerSession {
  const session = new ExplorerSession(new ApiClient(baseUrl));

  el<HTMLSelectElement>("preset").addEventListener("change", async (ev) => {
    render(await session.loadPreset((ev.target as HTMLSelectElement).value));
  });
  for (const id of ["base", "max-cap", "house", "rounding"]) {
    el(id).addEventListener("change", async () => {
      render(await session.applyParams(readParams()));
    });
  }
  el<HTMLButtonElement>("stage").addEventListener("click", async () => {
    const name = el<HTMLInputElement>("accede-name").value.trim();
    const popField = el<HTMLInputElement>("accede-pop").value.replace(/[,_ ]/g, "");
    const population = popField ? Number(popField) : CANDIDATE_PRESETS[name];
    if (!name || !population) return;
    render(await session.stageAccession({ name, population }));
  });
  el<HTMLButtonElement>("pin").addEventListener("click", () => {
    render(session.pinBaseline());
  });

  void session.loadPreset("eu27").then(render);
  return session;
}

if (typeof document !== "undefined" && document.getElementById("results")) {
  boot("");
}
