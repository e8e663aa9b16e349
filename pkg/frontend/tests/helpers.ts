import { readFileSync } from "node:fs";
import { resolve } from "node:path";

import type { ApiClient, UploadOptions } from "../src/api.js";
import type {
  CrowdDoc,
  GraphDoc,
  PatternsDoc,
  SweepEntry,
  UploadResult,
  UserSummary,
} from "../src/types.js";

// vitest runs with the frontend directory as cwd; import.meta.url is not a
// file URL under the jsdom environment, so resolve from the project root.
export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(resolve(process.cwd(), "fixtures", name), "utf-8")) as T;
}

/** Fixture-backed service double: every response is a recorded document. */
export class FakeApi implements ApiClient {
  calls: string[] = [];
  uploadResult: UploadResult = { user_id: "u3", qualifying_day_count: 60, warnings: [] };
  uploadError: Error | null = null;

  async listUsers(): Promise<UserSummary[]> {
    this.calls.push("listUsers");
    return fixture<UserSummary[]>("users.json");
  }

  async userPatterns(userId: string, minSupport: number): Promise<PatternsDoc> {
    this.calls.push(`userPatterns:${userId}@${minSupport}`);
    return fixture<PatternsDoc>("user_u1_patterns.json");
  }

  async userGraph(userId: string, minSupport: number): Promise<GraphDoc> {
    this.calls.push(`userGraph:${userId}@${minSupport}`);
    return fixture<GraphDoc>("user_u1_graph.json");
  }

  async crowd(hour: number, _minSupport: number, _precision?: number, _signal?: AbortSignal): Promise<CrowdDoc> {
    this.calls.push(`crowd:${hour}`);
    if (hour === 8) return fixture<CrowdDoc>("crowd_hour8.json");
    const empty = fixture<CrowdDoc>("crowd_hour3.json");
    return { ...empty, hour_slot: hour };
  }

  async uploadHistory(_body: string, _options?: UploadOptions): Promise<UploadResult> {
    this.calls.push("uploadHistory");
    if (this.uploadError) throw this.uploadError;
    return this.uploadResult;
  }

  async runSweep(thresholds: number[]): Promise<SweepEntry[]> {
    this.calls.push(`runSweep:${thresholds.join(",")}`);
    return fixture<SweepEntry[]>("sweep.json");
  }
}

export function flushMicrotasks(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
