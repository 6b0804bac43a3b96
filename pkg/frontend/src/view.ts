/**
 * Pure view-model construction: turns a session snapshot into renderable
 * rows. All numbers come from the backend response; this module only
 * reshapes and annotates them.
 */

import { AllocationResponse, Rational } from "./api.js";
import { SessionSnapshot } from "./session.js";

export interface Row {
  rank: number;
  name: string;
  population: number;
  seats: number;
  capped: boolean;
  /** Post-rounding ratio inversion reported by the backend. */
  dpFlagged: boolean;
  ratioBefore: string;
  ratioAfter: string;
  /** Exact rationals, surfaced on hover. */
  exactBefore: Rational;
  exactAfter: Rational;
  baselineSeats: number | null;
  delta: number | null;
  deltaArrow: "▲" | "▼" | "·" | "new";
}

export interface TableView {
  rows: Row[];
  totalSeats: number;
  referenceDivisor: string;
  intervalText: string;
  satisfiesDp: boolean;
  dpFlagged: string[];
  cappedStates: string[];
}

/** One-decimal display with thousands separators, matching the backend. */
export function formatRatio(r: Rational): string {
  const [whole, frac = ""] = r.decimal.split(".");
  const grouped = whole.replace(/\B(?=(\d{3})+(?!\d))/g, ",");
  return `${grouped}.${(frac + "0").slice(0, 1)}`;
}

function intervalText(alloc: AllocationResponse): string {
  const iv = alloc.divisor_interval;
  if (iv.tie) return "tie boundary";
  const lo = `${iv.lo_open ? "(" : "["}${formatRatio(iv.lo)}`;
  const hi = iv.hi === null ? "∞)" : `${formatRatio(iv.hi)}${iv.hi_open ? ")" : "]"}`;
  return `${lo}, ${hi}`;
}

function deltaArrow(delta: number | null, isNew: boolean): Row["deltaArrow"] {
  if (isNew) return "new";
  if (delta === null || delta === 0) return "·";
  return delta > 0 ? "▲" : "▼";
}

export function buildTableView(snapshot: SessionSnapshot): TableView | null {
  const alloc = snapshot.allocation;
  if (!alloc) return null;
  const flagged = new Set(alloc.dp_report.post_rounding_violations);

  const rows = alloc.entries.map((e): Row => {
    const isNew = snapshot.baseline !== null && !snapshot.baseline.has(e.name);
    const baselineSeats = snapshot.baseline?.get(e.name) ?? null;
    const delta = baselineSeats === null ? null : e.seats - baselineSeats;
    return {
      rank: e.rank,
      name: e.name,
      population: e.population,
      seats: e.seats,
      capped: e.capped,
      dpFlagged: flagged.has(e.name),
      ratioBefore: formatRatio(e.ratio_before),
      ratioAfter: formatRatio(e.ratio_after),
      exactBefore: e.ratio_before,
      exactAfter: e.ratio_after,
      baselineSeats,
      delta,
      deltaArrow: deltaArrow(delta, isNew),
    };
  });

  return {
    rows,
    totalSeats: alloc.total_seats,
    referenceDivisor: formatRatio(alloc.divisor_interval.reference_divisor),
    intervalText: intervalText(alloc),
    satisfiesDp: alloc.dp_report.satisfies_revised_dp,
    dpFlagged: alloc.dp_report.post_rounding_violations,
    cappedStates: alloc.capped_states,
  };
}

export function errorBanner(snapshot: SessionSnapshot): string | null {
  const err = snapshot.error;
  if (!err) return null;
  switch (err.kind) {
    case "tie":
      return `Tie: ${err.tiedStates.join(", ")} — ${err.message}`;
    case "infeasible": {
      const range = err.feasibleHouse;
      const hint = range
        ? ` Feasible house sizes: ${range.lo}–${range.hi ?? "∞"}.`
        : "";
      return `Infeasible: ${err.message}.${hint}`;
    }
    case "parse":
      return `Invalid input: ${err.message}`;
    case "unreachable":
      return `Backend unreachable: ${err.message}`;
  }
}
