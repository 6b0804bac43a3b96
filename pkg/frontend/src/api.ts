/**
 * Typed client for the apportion HTTP service.
 *
 * The UI never computes seats itself: every number displayed comes from a
 * response of this API, which serialises exact rationals as
 * `{num, den, decimal}`.
 */

export interface Rational {
  num: number;
  den: number;
  decimal: string;
}

export interface StateIn {
  name: string;
  population: number;
}

export interface Params {
  base: string | number;
  max_cap: number | null;
  house_size: number | null;
  divisor?: string | number | null;
  rounding: "up" | "standard" | "down";
  tie_policy?: string | null;
}

export const DEFAULT_PARAMS: Params = {
  base: 5,
  max_cap: 96,
  house_size: 751,
  rounding: "up",
};

export interface AllocationEntry {
  rank: number;
  name: string;
  population: number;
  seats: number;
  capped: boolean;
  now_seats: number | null;
  ratio_before: Rational;
  ratio_after: Rational;
}

export interface DivisorInterval {
  lo: Rational;
  lo_open: boolean;
  hi: Rational | null;
  hi_open: boolean;
  reference_divisor: Rational;
  tie: boolean;
}

export interface DpReport {
  condition1_violations: [string, string][];
  pre_rounding_violations: [string, string][];
  post_rounding_violations: string[];
  satisfies_revised_dp: boolean;
}

export interface AllocationResponse {
  entries: AllocationEntry[];
  total_seats: number;
  capped_states: string[];
  divisor_interval: DivisorInterval;
  dp_report: DpReport;
  feasible_house: { lo: number; hi: number | null };
}

export interface Preset {
  id: string;
  label: string;
  snapshot_date: string;
  states: StateIn[];
  status_quo_seats: Record<string, number>;
}

export interface TieDetail {
  tied_states: string[];
  boundary_divisor: Rational;
  seats_contested: number;
}

export interface InfeasibleDetail {
  feasible_house: { lo: number; hi: number | null } | null;
}

export type ApiErrorCode = "TIE" | "INFEASIBLE" | "PARSE";

export class ApiError extends Error {
  constructor(
    readonly code: ApiErrorCode,
    message: string,
    readonly detail: Partial<TieDetail & InfeasibleDetail> = {},
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  async health(): Promise<boolean> {
    try {
      const resp = await this.fetchImpl(`${this.baseUrl}/api/health`);
      return resp.ok;
    } catch {
      return false;
    }
  }

  async presets(): Promise<Preset[]> {
    const resp = await this.fetchImpl(`${this.baseUrl}/api/presets`);
    if (!resp.ok) {
      throw new Error(`presets request failed: HTTP ${resp.status}`);
    }
    const body = (await resp.json()) as { presets: Preset[] };
    return body.presets;
  }

  async allocate(
    states: StateIn[],
    params: Params,
    signal?: AbortSignal,
  ): Promise<AllocationResponse> {
    const resp = await this.fetchImpl(`${this.baseUrl}/api/allocate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ states, params }),
      signal,
    });
    const body = await resp.json();
    if (!resp.ok) {
      const code = (body.code ?? "PARSE") as ApiErrorCode;
      throw new ApiError(code, body.message ?? `HTTP ${resp.status}`, body);
    }
    return body as AllocationResponse;
  }
}
