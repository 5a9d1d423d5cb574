// UI state and transitions, kept free of DOM so the logic is testable.
// At most one analyze request matters per input box: every request gets a
// sequence number and only the latest one may apply its result.

import type { AnalyzeResponse, OrthographyName } from "./types.js";
import type { Lang } from "./i18n.js";

export const PAGE_SIZE = 10;

export interface UiState {
  input: string;
  language: Lang;
  displayOrthography: OrthographyName | null; // null = follow the backend
  inputOrthography: OrthographyName | null; // null = let the backend detect
  response: AnalyzeResponse | null;
  error: string | null;
  /** word index -> selected segmentation index */
  selected: Record<number, number>;
  /** word index -> zero-based page of the segmentation list */
  page: Record<number, number>;
  requestSeq: number;
  appliedSeq: number;
  pending: boolean;
}

export function newState(): UiState {
  return {
    input: "",
    language: "es",
    displayOrthography: null,
    inputOrthography: null,
    response: null,
    error: null,
    selected: {},
    page: {},
    requestSeq: 0,
    appliedSeq: 0,
    pending: false,
  };
}

/** Mark a new in-flight request; returns its sequence number. */
export function beginRequest(state: UiState): number {
  state.requestSeq += 1;
  state.pending = true;
  return state.requestSeq;
}

/** Apply a response; returns false (and changes nothing) when a newer
 * request has been started since — latest wins. */
export function applyResponse(
  state: UiState,
  seq: number,
  response: AnalyzeResponse,
): boolean {
  if (seq < state.requestSeq || seq <= state.appliedSeq) {
    return false;
  }
  state.appliedSeq = seq;
  state.pending = false;
  state.response = response;
  state.error = null;
  state.selected = {};
  state.page = {};
  return true;
}

export function applyError(state: UiState, seq: number, message: string): boolean {
  if (seq < state.requestSeq || seq <= state.appliedSeq) {
    return false;
  }
  state.appliedSeq = seq;
  state.pending = false;
  state.response = null;
  state.error = message;
  return true;
}

export function selectSegmentation(state: UiState, word: number, index: number): void {
  state.selected[word] = index;
}

export function selectedSegmentation(state: UiState, word: number): number {
  return state.selected[word] ?? 0;
}

export function setPage(state: UiState, word: number, page: number): void {
  state.page[word] = Math.max(0, page);
}

export function currentPage(state: UiState, word: number): number {
  return state.page[word] ?? 0;
}

export function pageCount(total: number): number {
  return Math.max(1, Math.ceil(total / PAGE_SIZE));
}

/** Language toggle re-renders but never loses input or results. */
export function setLanguage(state: UiState, language: Lang): void {
  state.language = language;
}

export function setDisplayOrthography(
  state: UiState,
  orthography: OrthographyName | null,
): void {
  state.displayOrthography = orthography;
}

export function setInputOrthography(
  state: UiState,
  orthography: OrthographyName | null,
): void {
  state.inputOrthography = orthography;
}
