/** Composition root: builds the explorer layout, wires controls to the API,
 * and keeps the views strict functions of service responses.
 */

import { HttpApiClient, type ApiClient } from "./api.js";
import { renderCellDetails, renderCityView } from "./city-view.js";
import { renderGraph } from "./graph-view.js";
import { renderPatternTable } from "./pattern-table.js";
import { LatestRequester, debounce } from "./requests.js";
import {
  advanceHour,
  initialState,
  selectUser,
  setHour,
  setMinSupport,
  setView,
  togglePlayback,
  type ViewState,
} from "./state.js";
import { renderUploadPanel } from "./upload-panel.js";
import type { CrowdDoc } from "./types.js";

const PLAYBACK_INTERVAL_MS = 1500;
const SLIDER_DEBOUNCE_MS = 150;

declare global {
  interface Window {
    CROWDMOB_API?: string;
  }
}

export function startApp(root: HTMLElement, api?: ApiClient): void {
  const client = api ?? new HttpApiClient(window.CROWDMOB_API ?? "http://127.0.0.1:8000");
  let state: ViewState = initialState();
  let playbackTimer: ReturnType<typeof setInterval> | undefined;

  root.innerHTML = `
    <header>
      <h1>crowdmob explorer</h1>
      <p class="error-banner" hidden></p>
      <nav>
        <button class="tab-user">user view</button>
        <button class="tab-city">city view</button>
      </nav>
    </header>
    <section class="panel-user">
      <div class="user-list"></div>
      <label>min support <input type="range" class="support-slider" min="0.05" max="1" step="0.05" value="0.5">
        <span class="support-value">0.50</span></label>
      <div class="graph-view"></div>
      <div class="pattern-view"></div>
      <div class="upload-view"></div>
    </section>
    <section class="panel-city" hidden>
      <label>hour <input type="range" class="hour-slider" min="0" max="23" step="1" value="8">
        <span class="hour-value">08:00</span></label>
      <button class="play-toggle">play</button>
      <div class="city-map"></div>
      <div class="cell-details"></div>
    </section>
  `;

  const errorBanner = root.querySelector(".error-banner") as HTMLElement;
  const userPanel = root.querySelector(".panel-user") as HTMLElement;
  const cityPanel = root.querySelector(".panel-city") as HTMLElement;
  const userList = root.querySelector(".user-list") as HTMLElement;
  const graphView = root.querySelector(".graph-view") as HTMLElement;
  const patternView = root.querySelector(".pattern-view") as HTMLElement;
  const uploadView = root.querySelector(".upload-view") as HTMLElement;
  const cityMap = root.querySelector(".city-map") as HTMLElement;
  const cellDetails = root.querySelector(".cell-details") as HTMLElement;
  const hourSlider = root.querySelector(".hour-slider") as HTMLInputElement;
  const hourValue = root.querySelector(".hour-value") as HTMLElement;
  const supportSlider = root.querySelector(".support-slider") as HTMLInputElement;
  const supportValue = root.querySelector(".support-value") as HTMLElement;
  const playToggle = root.querySelector(".play-toggle") as HTMLButtonElement;

  const showError = (message: string) => {
    errorBanner.textContent = message;
    errorBanner.hidden = false;
  };
  const clearError = () => {
    errorBanner.hidden = true;
  };

  const snapshotRequester = new LatestRequester<CrowdDoc>((hour, signal) =>
    client.crowd(hour, state.minSupport, state.precision, signal),
  );

  async function refreshCity(): Promise<void> {
    try {
      const doc = await snapshotRequester.request(state.hourSlot);
      if (doc === null) return; // superseded; a newer hour is on its way
      clearError();
      renderCityView(cityMap, doc, ({ cell }) => renderCellDetails(cellDetails, cell));
    } catch (error) {
      cityMap.replaceChildren();
      showError(`service unreachable: ${String(error)}`);
    }
  }

  const debouncedRefreshCity = debounce(() => void refreshCity(), SLIDER_DEBOUNCE_MS);

  async function refreshUser(): Promise<void> {
    if (!state.selectedUser) {
      graphView.replaceChildren();
      patternView.replaceChildren();
      return;
    }
    try {
      const [graph, patterns] = await Promise.all([
        client.userGraph(state.selectedUser, state.minSupport),
        client.userPatterns(state.selectedUser, state.minSupport),
      ]);
      clearError();
      renderGraph(graphView, graph);
      renderPatternTable(patternView, patterns);
    } catch (error) {
      graphView.replaceChildren();
      patternView.replaceChildren();
      showError(`could not load user: ${String(error)}`);
    }
  }

  async function refreshUserList(): Promise<void> {
    try {
      const users = await client.listUsers();
      clearError();
      userList.replaceChildren();
      const list = document.createElement("ul");
      for (const user of users) {
        const item = document.createElement("li");
        const link = document.createElement("button");
        link.className = "user-entry";
        link.textContent = `${user.user_id} (${user.qualifying_day_count} days)`;
        link.addEventListener("click", () => {
          state = selectUser(state, user.user_id);
          applyView();
          void refreshUser();
        });
        item.append(link);
        list.append(item);
      }
      userList.append(list);
    } catch (error) {
      showError(`service unreachable: ${String(error)}`);
    }
  }

  function applyView(): void {
    userPanel.hidden = state.activeView !== "user";
    cityPanel.hidden = state.activeView !== "city";
  }

  function applyHour(): void {
    hourSlider.value = String(state.hourSlot);
    hourValue.textContent = `${String(state.hourSlot).padStart(2, "0")}:00`;
  }

  (root.querySelector(".tab-user") as HTMLButtonElement).addEventListener("click", () => {
    state = setView(state, "user");
    applyView();
  });
  (root.querySelector(".tab-city") as HTMLButtonElement).addEventListener("click", () => {
    state = setView(state, "city");
    applyView();
    void refreshCity();
  });

  supportSlider.addEventListener("input", () => {
    state = setMinSupport(state, Number(supportSlider.value));
    supportValue.textContent = state.minSupport.toFixed(2);
    void refreshUser();
    if (state.activeView === "city") debouncedRefreshCity();
  });

  hourSlider.addEventListener("input", () => {
    state = setHour(state, Number(hourSlider.value));
    applyHour();
    debouncedRefreshCity();
  });

  playToggle.addEventListener("click", () => {
    state = togglePlayback(state);
    playToggle.textContent = state.playing ? "pause" : "play";
    if (state.playing) {
      playbackTimer = setInterval(() => {
        state = advanceHour(state);
        applyHour();
        void refreshCity();
      }, PLAYBACK_INTERVAL_MS);
    } else if (playbackTimer !== undefined) {
      clearInterval(playbackTimer);
      playbackTimer = undefined;
    }
  });

  renderUploadPanel(uploadView, client, {
    onUploaded: (userId) => {
      void refreshUserList().then(() => {
        state = selectUser(state, userId);
        applyView();
        void refreshUser();
      });
    },
  });

  applyView();
  applyHour();
  void refreshUserList();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  startApp(document.getElementById("app") as HTMLElement);
}
