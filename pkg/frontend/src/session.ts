/**
 * Explorer session state: one dataset, the current parameters, staged
 * accessions, and the latest backend response.
 *
 * Every state-changing move issues exactly one allocate request. Moves are
 * sequenced latest-wins: an in-flight request is aborted when a newer move
 * arrives, and a stale response that still resolves is never rendered.
 */

import {
  AllocationResponse,
  ApiClient,
  ApiError,
  DEFAULT_PARAMS,
  Params,
  Preset,
  StateIn,
} from "./api.js";

export type SessionError =
  | { kind: "tie"; message: string; tiedStates: string[] }
  | { kind: "infeasible"; message: string; feasibleHouse: { lo: number; hi: number | null } | null }
  | { kind: "parse"; message: string }
  | { kind: "unreachable"; message: string };

export interface SessionSnapshot {
  datasetLabel: string;
  states: StateIn[];
  params: Params;
  staged: StateIn[];
  allocation: AllocationResponse | null;
  baseline: Map<string, number> | null;
  error: SessionError | null;
  pending: boolean;
}

function toSessionError(err: unknown): SessionError {
  if (err instanceof ApiError) {
    if (err.code === "TIE") {
      return { kind: "tie", message: err.message, tiedStates: err.detail.tied_states ?? [] };
    }
    if (err.code === "INFEASIBLE") {
      return {
        kind: "infeasible",
        message: err.message,
        feasibleHouse: err.detail.feasible_house ?? null,
      };
    }
    return { kind: "parse", message: err.message };
  }
  return { kind: "unreachable", message: err instanceof Error ? err.message : String(err) };
}

export class ExplorerSession {
  private datasetLabel = "";
  private states: StateIn[] = [];
  private params: Params = { ...DEFAULT_PARAMS };
  private staged: StateIn[] = [];
  private allocation: AllocationResponse | null = null;
  private baseline: Map<string, number> | null = null;
  private error: SessionError | null = null;
  private pending = false;

  private moveCounter = 0;
  private inFlight: AbortController | null = null;

  constructor(private readonly api: ApiClient) {}

  snapshot(): SessionSnapshot {
    return {
      datasetLabel: this.datasetLabel,
      states: [...this.states],
      params: { ...this.params },
      staged: [...this.staged],
      allocation: this.allocation,
      baseline: this.baseline ? new Map(this.baseline) : null,
      error: this.error,
      pending: this.pending,
    };
  }

  async loadPreset(presetId: string): Promise<SessionSnapshot> {
    let preset: Preset | undefined;
    try {
      const presets = await this.api.presets();
      preset = presets.find((p) => p.id === presetId);
    } catch (err) {
      this.error = toSessionError(err);
      this.allocation = null;
      return this.snapshot();
    }
    if (!preset) {
      this.error = { kind: "parse", message: `unknown preset ${presetId}` };
      this.allocation = null;
      return this.snapshot();
    }
    this.datasetLabel = preset.label;
    this.states = preset.states;
    this.staged = [];
    this.params = { ...DEFAULT_PARAMS };
    this.baseline = Object.keys(preset.status_quo_seats).length
      ? new Map(Object.entries(preset.status_quo_seats))
      : null;
    return this.refresh();
  }

  loadStates(label: string, states: StateIn[]): Promise<SessionSnapshot> {
    this.datasetLabel = label;
    this.states = [...states];
    this.staged = [];
    this.params = { ...DEFAULT_PARAMS };
    this.baseline = null;
    return this.refresh();
  }

  applyParams(params: Partial<Params>): Promise<SessionSnapshot> {
    this.params = { ...this.params, ...params };
    return this.refresh();
  }

  stageAccession(state: StateIn): Promise<SessionSnapshot> {
    const names = new Set([...this.states, ...this.staged].map((s) => s.name));
    if (names.has(state.name)) {
      this.error = { kind: "parse", message: `state ${state.name} is already present` };
      return Promise.resolve(this.snapshot());
    }
    this.staged = [...this.staged, state];
    return this.refresh();
  }

  unstageAccession(name: string): Promise<SessionSnapshot> {
    this.staged = this.staged.filter((s) => s.name !== name);
    return this.refresh();
  }

  /** Pin the current allocation as the comparison baseline. */
  pinBaseline(): SessionSnapshot {
    if (this.allocation) {
      this.baseline = new Map(this.allocation.entries.map((e) => [e.name, e.seats]));
    }
    return this.snapshot();
  }

  private async refresh(): Promise<SessionSnapshot> {
    const move = ++this.moveCounter;
    this.inFlight?.abort();
    const controller = new AbortController();
    this.inFlight = controller;
    this.pending = true;

    let result: AllocationResponse | null = null;
    let error: SessionError | null = null;
    try {
      result = await this.api.allocate(
        [...this.states, ...this.staged],
        this.params,
        controller.signal,
      );
    } catch (err) {
      if (controller.signal.aborted) {
        // Superseded by a newer move; that move owns the next render.
        return this.snapshot();
      }
      error = toSessionError(err);
    }
    if (move !== this.moveCounter) {
      return this.snapshot();
    }
    this.pending = false;
    this.inFlight = null;
    this.error = error;
    if (result) {
      this.allocation = result;
    } else if (error && error.kind !== "tie" && error.kind !== "infeasible") {
      // Hard failures must not leave stale numbers on screen.
      this.allocation = null;
    }
    return this.snapshot();
  }
}
