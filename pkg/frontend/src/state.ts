/** View state and its pure transitions. The hour slider and playback both
 * funnel through these, so cyclic wrap and range clamping live in one place.
 */

export type ActiveView = "user" | "city";

export interface ViewState {
  selectedUser: string | null;
  minSupport: number;
  hourSlot: number;
  precision: number;
  activeView: ActiveView;
  playing: boolean;
}

export const HOURS_PER_DAY = 24;

export function initialState(): ViewState {
  return {
    selectedUser: null,
    minSupport: 0.5,
    hourSlot: 8,
    precision: 0.01,
    activeView: "user",
    playing: false,
  };
}

export function clampMinSupport(value: number): number {
  if (Number.isNaN(value)) return 0.5;
  return Math.min(1, Math.max(0.05, value));
}

export function setMinSupport(state: ViewState, value: number): ViewState {
  return { ...state, minSupport: clampMinSupport(value) };
}

export function setHour(state: ViewState, hour: number): ViewState {
  const wrapped = ((Math.round(hour) % HOURS_PER_DAY) + HOURS_PER_DAY) % HOURS_PER_DAY;
  return { ...state, hourSlot: wrapped };
}

/** Playback tick: 0 -> 1 -> ... -> 23 -> 0. */
export function advanceHour(state: ViewState): ViewState {
  return { ...state, hourSlot: (state.hourSlot + 1) % HOURS_PER_DAY };
}

export function selectUser(state: ViewState, userId: string | null): ViewState {
  return { ...state, selectedUser: userId, activeView: userId === null ? state.activeView : "user" };
}

export function setView(state: ViewState, view: ActiveView): ViewState {
  return { ...state, activeView: view };
}

export function togglePlayback(state: ViewState): ViewState {
  return { ...state, playing: !state.playing };
}
