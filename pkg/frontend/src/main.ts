// DOM glue: the only file that touches the document. All rendering logic
// lives in view.ts, all state transitions in state.ts.

import { ApiError, createApi } from "./api.js";
import { t } from "./i18n.js";
import {
  applyError,
  applyResponse,
  beginRequest,
  newState,
  selectSegmentation,
  setDisplayOrthography,
  setInputOrthography,
  setLanguage,
  setPage,
  currentPage,
} from "./state.js";
import type { Lang } from "./i18n.js";
import type { OrthographyName } from "./types.js";
import { renderChrome, renderOrthographyPicker, renderResults } from "./view.js";

const api = createApi("");
const state = newState();
const root = document.getElementById("app") as HTMLElement;

function rerenderResults(): void {
  const results = document.getElementById("results");
  if (results) {
    results.innerHTML = renderResults(state);
  }
}

function rerenderAll(): void {
  root.innerHTML = renderChrome(state);
  wire();
}

async function analyze(): Promise<void> {
  const hint = document.getElementById("hint") as HTMLElement;
  hint.innerHTML = "";
  if (!state.input.trim()) {
    // no request for empty input, just an inline hint
    hint.textContent = t(state.language, "empty_input");
    return;
  }
  const seq = beginRequest(state);
  try {
    const response = await api.analyze(state.input, {
      inputOrthography: state.inputOrthography,
      displayOrthography: state.displayOrthography,
    });
    if (applyResponse(state, seq, response)) {
      rerenderResults();
    }
  } catch (err) {
    const message = err instanceof Error ? err.message : String(err);
    if (!applyError(state, seq, message)) {
      return;
    }
    rerenderResults();
    if (err instanceof ApiError && err.code === "undetectable") {
      hint.innerHTML = renderOrthographyPicker(state.language);
      hint.querySelectorAll<HTMLButtonElement>(".pick-orth").forEach((btn) => {
        btn.addEventListener("click", () => {
          setInputOrthography(state, btn.dataset.orth as OrthographyName);
          void analyze();
        });
      });
    }
  }
}

function wire(): void {
  const form = document.getElementById("analyze-form") as HTMLFormElement;
  const input = document.getElementById("input") as HTMLInputElement;
  const display = document.getElementById("display") as HTMLSelectElement;
  const language = document.getElementById("language") as HTMLSelectElement;

  input.addEventListener("input", () => {
    state.input = input.value;
    setInputOrthography(state, null); // a new text means a fresh detection
  });
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void analyze();
  });
  display.addEventListener("change", () => {
    setDisplayOrthography(
      state,
      (display.value || null) as OrthographyName | null,
    );
    if (state.response) {
      void analyze(); // re-fetch: surfaces are rendered server-side
    }
  });
  language.addEventListener("change", () => {
    setLanguage(state, language.value as Lang);
    rerenderAll(); // chrome strings change; input + results survive in state
  });

  const results = document.getElementById("results") as HTMLElement;
  results.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const wordAttr = target.dataset.word;
    if (wordAttr === undefined) {
      return;
    }
    const word = Number(wordAttr);
    if (target.classList.contains("seg-entry")) {
      selectSegmentation(state, word, Number(target.dataset.seg));
      rerenderResults();
    } else if (target.classList.contains("pager-prev")) {
      setPage(state, word, currentPage(state, word) - 1);
      rerenderResults();
    } else if (target.classList.contains("pager-next")) {
      setPage(state, word, currentPage(state, word) + 1);
      rerenderResults();
    }
  });
}

rerenderAll();
