/** DOM shell: wires the query panel, results list, tag inspector and
 * report drawer to the HTTP API. At most one search request is in
 * flight; a newer submission aborts the older one so stale results
 * never render. */

import { ApiClient, ApiError } from "./api.js";
import { renderBanner, renderDetail, renderResults, renderTags } from "./view.js";

const DEBOUNCE_MS = 300;
const HISTORY_LIMIT = 12;
const TAGS_OPEN_KEY = "lexminer.tags.open";

function apiBase(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  return (fromQuery ?? "http://127.0.0.1:8080").replace(/\/+$/, "");
}

function element<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const api = new ApiClient(apiBase());

const queryInput = element<HTMLTextAreaElement>("query");
const topKSelect = element<HTMLSelectElement>("top-k");
const searchButton = element<HTMLButtonElement>("search-btn");
const statusBox = element<HTMLDivElement>("status");
const resultsBox = element<HTMLDivElement>("results");
const tagsPanel = element<HTMLDetailsElement>("tags-panel");
const tagsBody = element<HTMLDivElement>("tags-body");
const historyList = element<HTMLUListElement>("history");
const drawer = element<HTMLElement>("drawer");
const drawerBody = element<HTMLDivElement>("drawer-body");

let inflight: AbortController | null = null;
let debounceTimer: number | undefined;
const history: string[] = [];

function setBusy(busy: boolean): void {
  searchButton.disabled = busy || !queryInput.value.trim();
  searchButton.textContent = busy ? "searching…" : "search";
}

function rememberQuery(text: string): void {
  const existing = history.indexOf(text);
  if (existing >= 0) history.splice(existing, 1);
  history.unshift(text);
  if (history.length > HISTORY_LIMIT) history.pop();
  historyList.innerHTML = "";
  for (const entry of history) {
    const item = document.createElement("li");
    const link = document.createElement("a");
    link.href = "#";
    link.textContent = entry;
    link.addEventListener("click", (event) => {
      event.preventDefault();
      queryInput.value = entry;
      void runSearch();
    });
    item.appendChild(link);
    historyList.appendChild(item);
  }
}

async function runSearch(): Promise<void> {
  const text = queryInput.value.trim();
  if (!text) return;
  inflight?.abort();
  const controller = new AbortController();
  inflight = controller;
  setBusy(true);
  statusBox.innerHTML = "";
  try {
    const topK = Number.parseInt(topKSelect.value, 10);
    const response = await api.search(text, topK, controller.signal);
    if (controller.signal.aborted) return;
    rememberQuery(text);
    resultsBox.innerHTML = renderResults(response);
    const tagMarkup = renderTags(response.query_tags);
    tagsPanel.hidden = !tagMarkup;
    tagsBody.innerHTML = tagMarkup;
  } catch (err) {
    if (controller.signal.aborted) return;
    if (err instanceof ApiError && err.status === 503) {
      statusBox.innerHTML = renderBanner("index not loaded — start the server with a mined index");
    } else if (err instanceof ApiError) {
      statusBox.innerHTML = renderBanner(`${err.code}: ${err.message}`);
    } else {
      throw err;
    }
  } finally {
    if (inflight === controller) {
      inflight = null;
      setBusy(false);
    }
  }
}

async function openReport(id: string): Promise<void> {
  try {
    const report = await api.report(id);
    drawerBody.innerHTML = renderDetail(report);
    drawer.hidden = false;
  } catch (err) {
    if (err instanceof ApiError) {
      statusBox.innerHTML = renderBanner(`${err.code}: ${err.message}`);
    } else {
      throw err;
    }
  }
}

queryInput.addEventListener("input", () => {
  setBusy(false);
  window.clearTimeout(debounceTimer);
  if (queryInput.value.trim()) {
    debounceTimer = window.setTimeout(() => void runSearch(), DEBOUNCE_MS);
  }
});

queryInput.addEventListener("keydown", (event) => {
  if (event.key === "Enter" && !event.shiftKey) {
    event.preventDefault();
    window.clearTimeout(debounceTimer);
    void runSearch();
  }
});

searchButton.addEventListener("click", () => {
  window.clearTimeout(debounceTimer);
  void runSearch();
});

resultsBox.addEventListener("click", (event) => {
  const card = (event.target as HTMLElement).closest<HTMLElement>(".card[data-id]");
  if (card?.dataset.id) void openReport(card.dataset.id);
});

element<HTMLButtonElement>("drawer-close").addEventListener("click", () => {
  drawer.hidden = true;
});

tagsPanel.addEventListener("toggle", () => {
  sessionStorage.setItem(TAGS_OPEN_KEY, tagsPanel.open ? "1" : "0");
});
tagsPanel.open = sessionStorage.getItem(TAGS_OPEN_KEY) === "1";

setBusy(false);
void api.health().then(
  (health) => {
    statusBox.innerHTML = "";
    document.title = `lexminer — ${health.n_docs} reports`;
  },
  (err: unknown) => {
    if (err instanceof ApiError && err.status === 503) {
      statusBox.innerHTML = renderBanner("index not loaded — start the server with a mined index");
    } else if (err instanceof ApiError) {
      statusBox.innerHTML = renderBanner(`cannot reach the search service at ${api.baseUrl}`);
    }
  },
);
