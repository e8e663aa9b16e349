/** Typed client for the analytics service endpoints. */

import type { CrowdDoc, GraphDoc, PatternsDoc, SweepEntry, UploadResult, UserSummary } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export interface UploadOptions {
  replace?: boolean;
  relax?: boolean;
}

/** The surface the views depend on; tests substitute fixture-backed fakes. */
export interface ApiClient {
  listUsers(): Promise<UserSummary[]>;
  userPatterns(userId: string, minSupport: number): Promise<PatternsDoc>;
  userGraph(userId: string, minSupport: number): Promise<GraphDoc>;
  crowd(hour: number, minSupport: number, precision?: number, signal?: AbortSignal): Promise<CrowdDoc>;
  uploadHistory(body: string, options?: UploadOptions): Promise<UploadResult>;
  runSweep(thresholds: number[]): Promise<SweepEntry[]>;
}

async function asError(response: Response): Promise<ApiError> {
  let code = "error";
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = (await response.json()) as { code?: string; message?: string };
    if (body.code) code = body.code;
    if (body.message) message = body.message;
  } catch {
    // non-JSON error body; keep the status line
  }
  return new ApiError(response.status, code, message);
}

export class HttpApiClient implements ApiClient {
  constructor(private readonly baseUrl: string) {}

  private url(path: string, params: Record<string, string | number | boolean | undefined> = {}): string {
    const url = new URL(path, this.baseUrl);
    for (const [key, value] of Object.entries(params)) {
      if (value !== undefined) url.searchParams.set(key, String(value));
    }
    return url.toString();
  }

  private async getJson<T>(url: string, signal?: AbortSignal): Promise<T> {
    const response = await fetch(url, { signal });
    if (!response.ok) throw await asError(response);
    return (await response.json()) as T;
  }

  listUsers(): Promise<UserSummary[]> {
    return this.getJson(this.url("/users"));
  }

  userPatterns(userId: string, minSupport: number): Promise<PatternsDoc> {
    return this.getJson(this.url(`/users/${encodeURIComponent(userId)}/patterns`, { min_support: minSupport }));
  }

  userGraph(userId: string, minSupport: number): Promise<GraphDoc> {
    return this.getJson(this.url(`/users/${encodeURIComponent(userId)}/graph`, { min_support: minSupport }));
  }

  crowd(hour: number, minSupport: number, precision?: number, signal?: AbortSignal): Promise<CrowdDoc> {
    return this.getJson(this.url("/crowd", { hour, min_support: minSupport, precision }), signal);
  }

  async uploadHistory(body: string, options: UploadOptions = {}): Promise<UploadResult> {
    const response = await fetch(this.url("/users", { replace: options.replace, relax: options.relax }), {
      method: "POST",
      headers: { "Content-Type": "text/plain" },
      body,
    });
    if (!response.ok) throw await asError(response);
    return (await response.json()) as UploadResult;
  }

  async runSweep(thresholds: number[]): Promise<SweepEntry[]> {
    const response = await fetch(this.url("/sweep"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ thresholds }),
    });
    if (!response.ok) throw await asError(response);
    return (await response.json()) as SweepEntry[];
  }
}
