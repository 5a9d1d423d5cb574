// HTML-string renderers. Pure functions of (state, data) so tests can
// assert on the markup without a browser; main.ts owns the actual DOM.

import { Lang, t, tagTooltip } from "./i18n.js";
import {
  PAGE_SIZE,
  UiState,
  currentPage,
  pageCount,
  selectedSegmentation,
} from "./state.js";
import type {
  Conversion,
  OrthographyName,
  Segmentation,
  WordResult,
} from "./types.js";
import { ORTHOGRAPHIES } from "./types.js";

// High-contrast default palette (cycled over pieces); swappable wholesale.
export let PALETTE: string[] = [
  "#1b6ca8",
  "#c23b22",
  "#1e7d32",
  "#7b1fa2",
  "#b26a00",
  "#00697c",
];

export function setPalette(colors: string[]): void {
  if (colors.length > 0) {
    PALETTE = colors.slice();
  }
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function pieceColor(index: number): string {
  return PALETTE[index % PALETTE.length];
}

export function renderSegmentation(seg: Segmentation, lang: Lang): string {
  const blocks = seg.pieces
    .map(
      (piece, i) =>
        `<span class="morph-block kind-${piece.kind}" ` +
        `style="background:${pieceColor(i)}">${escapeHtml(piece.surface)}</span>`,
    )
    .join("");
  const lines = seg.lines
    .map((line) => {
      const tags = line.tags
        .map((tag) => {
          const tooltip = tagTooltip(lang, tag);
          return tooltip
            ? `<abbr class="tag" title="${escapeHtml(tooltip)}">${escapeHtml(tag)}</abbr>`
            : `<span class="tag">${escapeHtml(tag)}</span>`;
        })
        .join(" ");
      return (
        `<div class="gloss-line"><span class="gloss-surface">` +
        `${escapeHtml(line.surface)}</span> ${tags} ` +
        `<span class="gloss-text">${escapeHtml(line.gloss_es)}</span></div>`
      );
    })
    .join("");
  return (
    `<div class="segmentation">` +
    `<div class="seg-header">${escapeHtml(seg.header)}</div>` +
    `<div class="seg-blocks">${blocks}</div>` +
    `<div class="seg-lines">${lines}</div></div>`
  );
}

export function renderConversions(
  conversions: Record<OrthographyName, Conversion>,
  lang: Lang,
): string {
  const texts = ORTHOGRAPHIES.map((o) => conversions[o].text);
  const identical = texts.every((text) => text === texts[0]);
  const panels = ORTHOGRAPHIES.map((o) => {
    const conv = conversions[o];
    const badge = conv.lossy
      ? ` <span class="badge lossy-badge">${t(lang, "lossy_badge")}</span>`
      : "";
    return (
      `<div class="conversion-panel"><span class="orth-name">${o}</span> ` +
      `<span class="conv-text">${escapeHtml(conv.text)}</span>${badge}</div>`
    );
  }).join("");
  const identicalBadge = identical
    ? `<span class="badge identical-badge">${t(lang, "identical_badge")}</span>`
    : "";
  return `<div class="conversions">${panels}${identicalBadge}</div>`;
}

export function renderWordCard(
  word: WordResult,
  wordIndex: number,
  state: UiState,
): string {
  const lang = state.language;
  const parts: string[] = [
    `<div class="word-card" data-word="${wordIndex}">`,
    `<h3 class="word-title">${escapeHtml(word.word)}</h3>`,
    renderConversions(word.conversions, lang),
  ];

  if (word.segmentations.length === 0) {
    parts.push(`<div class="no-analysis">${t(lang, "no_analysis")}</div>`);
    for (const failure of word.failures) {
      parts.push(
        `<div class="failure">[${escapeHtml(failure.reason)}] ` +
          `${escapeHtml(failure.detail)}</div>`,
      );
    }
    parts.push("</div>");
    return parts.join("");
  }

  const total = word.segmentations.length;
  const page = Math.min(currentPage(state, wordIndex), pageCount(total) - 1);
  const start = page * PAGE_SIZE;
  const visible = word.segmentations.slice(start, start + PAGE_SIZE);
  const selected = selectedSegmentation(state, wordIndex);

  parts.push(
    `<div class="seg-count">${total} ${t(lang, "alternatives")}</div>`,
    `<ul class="seg-list">`,
  );
  visible.forEach((seg, offset) => {
    const index = start + offset;
    const cls = index === selected ? "seg-entry selected" : "seg-entry";
    parts.push(
      `<li class="${cls}" data-word="${wordIndex}" data-seg="${index}">` +
        `${escapeHtml(seg.header)}</li>`,
    );
  });
  parts.push("</ul>");

  if (total > PAGE_SIZE) {
    parts.push(
      `<div class="pager">` +
        `<button class="pager-prev" data-word="${wordIndex}">${t(lang, "prev")}</button>` +
        ` ${t(lang, "page")} ${page + 1}/${pageCount(total)} ` +
        `<button class="pager-next" data-word="${wordIndex}">${t(lang, "next")}</button>` +
        `</div>`,
    );
  }

  const current = word.segmentations[Math.min(selected, total - 1)];
  parts.push(renderSegmentation(current, lang));
  if (word.truncated) {
    parts.push(`<div class="truncated">${t(lang, "truncated")}</div>`);
  }
  parts.push("</div>");
  return parts.join("");
}

export function renderResults(state: UiState): string {
  const lang = state.language;
  if (state.error !== null) {
    return `<div class="error">${t(lang, "error_prefix")}: ${escapeHtml(state.error)}</div>`;
  }
  const response = state.response;
  if (response === null) {
    return "";
  }
  const conflict = response.orthography.conflict
    ? ` <span class="badge conflict-badge">${t(lang, "conflict_note")}</span>`
    : "";
  const header =
    `<div class="detected">${t(lang, "detected")}: ` +
    `<strong>${response.orthography.resolved}</strong>${conflict}</div>`;
  const cards = response.words
    .map((word, i) => renderWordCard(word, i, state))
    .join("");
  return header + `<div class="cards">${cards}</div>`;
}

export function renderOrthographyPicker(lang: Lang): string {
  const buttons = ORTHOGRAPHIES.map(
    (o) => `<button class="pick-orth" data-orth="${o}">${o}</button>`,
  ).join(" ");
  return (
    `<div class="orth-picker">${t(lang, "choose_orthography")} ${buttons}</div>`
  );
}

export function renderChrome(state: UiState): string {
  const lang = state.language;
  const displayOptions = ['<option value="">' + t(lang, "auto") + "</option>"]
    .concat(
      ORTHOGRAPHIES.map(
        (o) =>
          `<option value="${o}"${state.displayOrthography === o ? " selected" : ""}>${o}</option>`,
      ),
    )
    .join("");
  return (
    `<h1>${t(lang, "title")}</h1>` +
    `<form id="analyze-form">` +
    `<input id="input" type="text" placeholder="${t(lang, "placeholder")}" ` +
    `value="${escapeHtml(state.input)}" autocomplete="off">` +
    `<button id="analyze" type="submit">${t(lang, "analyze")}</button>` +
    `</form>` +
    `<label class="control">${t(lang, "display_label")} ` +
    `<select id="display">${displayOptions}</select></label>` +
    `<label class="control">${t(lang, "language_label")} ` +
    `<select id="language">` +
    `<option value="es"${lang === "es" ? " selected" : ""}>español</option>` +
    `<option value="arn"${lang === "arn" ? " selected" : ""}>mapuzugun</option>` +
    `</select></label>` +
    `<div id="hint"></div>` +
    `<div id="results">${renderResults(state)}</div>`
  );
}
