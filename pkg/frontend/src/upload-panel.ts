/** Upload panel: post a pasted or chosen check-in history, surface service
 * warnings and errors inline, and hand the new user id to the explorer.
 */

import { ApiError, type ApiClient } from "./api.js";

export interface UploadPanelOptions {
  onUploaded: (userId: string) => void;
}

export function renderUploadPanel(container: HTMLElement, api: ApiClient, options: UploadPanelOptions): void {
  container.replaceChildren();

  const textarea = document.createElement("textarea");
  textarea.className = "upload-input";
  textarea.placeholder = "Paste check-in history (tab-separated lines) ...";
  textarea.rows = 6;

  const relaxLabel = document.createElement("label");
  const relax = document.createElement("input");
  relax.type = "checkbox";
  relax.className = "upload-relax";
  relax.checked = true;
  relaxLabel.append(relax, document.createTextNode(" demo mode (admit short histories)"));

  const replaceLabel = document.createElement("label");
  const replace = document.createElement("input");
  replace.type = "checkbox";
  replace.className = "upload-replace";
  replaceLabel.append(replace, document.createTextNode(" replace existing user"));

  const button = document.createElement("button");
  button.className = "upload-submit";
  button.textContent = "Upload history";

  const status = document.createElement("p");
  status.className = "upload-status";

  button.addEventListener("click", async () => {
    status.className = "upload-status";
    status.textContent = "uploading ...";
    try {
      const result = await api.uploadHistory(textarea.value, {
        relax: relax.checked,
        replace: replace.checked,
      });
      status.textContent =
        result.warnings.length > 0
          ? `uploaded ${result.user_id} with warnings: ${result.warnings.join("; ")}`
          : `uploaded ${result.user_id} (${result.qualifying_day_count} qualifying days)`;
      options.onUploaded(result.user_id);
    } catch (error) {
      status.className = "upload-status upload-error";
      if (error instanceof ApiError) {
        status.textContent = `${error.code}: ${error.message}`;
      } else {
        status.textContent = `upload failed: ${String(error)}`;
      }
    }
  });

  container.append(textarea, relaxLabel, replaceLabel, button, status);
}
