/** Request discipline for the hour slider: debounce to one request per settled
 * value, keep at most one snapshot request in flight (superseded requests are
 * aborted), and discard responses that arrive for a stale hour.
 */

export function debounce<A extends unknown[]>(fn: (...args: A) => void, delayMs: number): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = undefined;
      fn(...args);
    }, delayMs);
  };
}

export type Fetcher<T> = (value: number, signal: AbortSignal) => Promise<T>;

export class LatestRequester<T> {
  private token = 0;
  private controller: AbortController | null = null;
  private inFlight = 0;

  constructor(private readonly fetcher: Fetcher<T>) {}

  /** Number of requests currently awaited and not superseded. */
  get inFlightCount(): number {
    return this.inFlight;
  }

  /**
   * Fetch for the given value. Resolves with the document, or null when the
   * request was superseded by a newer one (the stale response is discarded).
   */
  async request(value: number): Promise<T | null> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    const token = ++this.token;
    this.inFlight += 1;
    try {
      const result = await this.fetcher(value, controller.signal);
      return token === this.token ? result : null;
    } catch (error) {
      if (controller.signal.aborted) return null;
      throw error;
    } finally {
      this.inFlight -= 1;
      if (this.controller === controller) this.controller = null;
    }
  }
}
