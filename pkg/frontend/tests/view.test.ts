// Rendering tests over frozen /api/analyze payloads (frontend/fixtures/,
// regenerated by the backend's scripts/make_fixtures.py).

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { newState, selectSegmentation, setPage } from "../src/state.js";
import type { AnalyzeResponse, Segmentation, WordResult } from "../src/types.js";
import {
  renderConversions,
  renderResults,
  renderSegmentation,
  renderWordCard,
  setPalette,
  PALETTE,
} from "../src/view.js";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "..", "fixtures");

function fixture(name: string): AnalyzeResponse {
  return JSON.parse(readFileSync(join(FIXTURES, `${name}.json`), "utf-8"));
}

function stateWith(response: AnalyzeResponse) {
  const state = newState();
  state.response = response;
  return state;
}

function count(html: string, marker: string): number {
  return html.split(marker).length - 1;
}

describe("golden card (txekayawkelai)", () => {
  const response = fixture("txekayawkelai");
  const state = stateWith(response);
  const html = renderWordCard(response.words[0], 0, state);

  it("renders five morpheme blocks", () => {
    expect(count(html, 'class="morph-block')).toBe(5);
  });

  it("renders five gloss lines with the backend's Spanish", () => {
    expect(count(html, 'class="gloss-line"')).toBe(5);
    for (const needle of [
      "caminar, marchar, pasear",
      "andar",
      "habitualmente",
      "negación",
      "el / ella",
    ]) {
      expect(html).toContain(needle);
    }
  });

  it("shows the hyphenated header and the three conversions", () => {
    expect(html).toContain("txeka-yaw-ke-la-i");
    expect(html).toContain("xekayawkelai");
    expect(html).toContain("trekayawkelai");
  });

  it("marks jargon tags with tooltips", () => {
    expect(html).toMatch(/<abbr class="tag" title="[^"]*intransitivo/);
  });

  it("display toggle re-renders surfaces from a new payload, same widget", () => {
    const detected = renderResults(state);
    expect(detected).toContain("azumchefe");
    expect(count(detected, 'class="word-card"')).toBe(1);
  });
});

function syntheticWord(n: number): WordResult {
  const seg = (i: number): Segmentation => ({
    word: "xekalai",
    display_orthography: "ragileo",
    header: `alt-${i}`,
    context_free: true,
    pieces: [
      { morph_id: "xekan", kind: "root", start: 0, end: 4, surface: "xeka" },
      { morph_id: "i", kind: "ending", start: 6, end: 7, surface: "i" },
    ],
    lines: [],
  });
  return {
    word: "xekalai",
    detected_orthographies: ["ragileo"],
    display_orthography: "ragileo",
    conversions: {
      ragileo: { text: "xekalai", lossy: false },
      unificado: { text: "trekalai", lossy: false },
      azumchefe: { text: "txekalai", lossy: false },
    },
    segmentations: Array.from({ length: n }, (_, i) => seg(i)),
    truncated: false,
    failures: [],
  };
}

describe("never drops alternatives", () => {
  it("a word with N <= 10 segmentations lists exactly N entries", () => {
    for (const n of [1, 2, 7, 10]) {
      const html = renderWordCard(syntheticWord(n), 0, newState());
      expect(count(html, 'class="seg-entry')).toBe(n);
    }
  });

  it("the phrase fixture keeps both readings of chillkatuwekelan", () => {
    const response = fixture("pichikalu-phrase");
    const html = renderResults(stateWith(response));
    const last = response.words[response.words.length - 1];
    expect(last.segmentations.length).toBe(2);
    expect(count(html, 'class="word-card"')).toBe(response.words.length);
    for (const seg of last.segmentations) {
      expect(html).toContain(seg.header);
    }
  });

  it("beyond 10 it paginates instead of dropping", () => {
    const state = newState();
    const word = syntheticWord(25);
    const page0 = renderWordCard(word, 0, state);
    expect(count(page0, 'class="seg-entry')).toBe(10);
    expect(page0).toContain('class="pager"');
    expect(page0).toContain("1/3");
    setPage(state, 0, 2);
    const page2 = renderWordCard(word, 0, state);
    expect(count(page2, 'class="seg-entry')).toBe(5);
    // every alternative reachable across the pages
    const seen = new Set<string>();
    for (let p = 0; p < 3; p++) {
      setPage(state, 0, p);
      const html = renderWordCard(word, 0, state);
      for (const seg of word.segmentations) {
        if (html.includes(`>${seg.header}</li>`)) {
          seen.add(seg.header);
        }
      }
    }
    expect(seen.size).toBe(25);
  });

  it("selecting an alternative expands it", () => {
    const state = newState();
    selectSegmentation(state, 0, 1);
    const html = renderWordCard(syntheticWord(3), 0, state);
    expect(html).toContain('data-seg="1">alt-1');
    expect(html).toMatch(/seg-entry selected" data-word="0" data-seg="1"/);
  });
});

describe("failure and conversion rendering", () => {
  it("an unanalyzable word shows the failure reasons, never a blank card", () => {
    const response = fixture("xxxx");
    const html = renderWordCard(response.words[0], 0, stateWith(response));
    expect(html).toContain("no-match");
    expect(html).toMatch(/no-analysis/);
  });

  it("identical conversions get the identical badge", () => {
    const response = fixture("ruka");
    const html = renderConversions(response.words[0].conversions, "es");
    expect(html).toContain("identical-badge");
  });

  it("lossy conversions get the lossy badge", () => {
    const html = renderConversions(
      {
        ragileo: { text: "tapvl", lossy: true },
        unificado: { text: "t̲apül", lossy: false },
        azumchefe: { text: "t'apül", lossy: false },
      },
      "es",
    );
    expect(count(html, "lossy-badge")).toBe(1);
  });

  it("escapes markup coming from input", () => {
    const response = fixture("ruka");
    const word = { ...response.words[0], word: "<script>alert(1)</script>" };
    const html = renderWordCard(word, 0, stateWith(response));
    expect(html).not.toContain("<script>");
    expect(html).toContain("&lt;script&gt;");
  });
});

describe("palette", () => {
  it("cycles colors over pieces and is swappable", () => {
    const seg = fixture("txekayawkelai").words[0].segmentations[0];
    const original = PALETTE.slice();
    try {
      setPalette(["#000001", "#000002"]);
      const html = renderSegmentation(seg, "es");
      expect(count(html, "#000001")).toBe(3); // pieces 0, 2, 4
      expect(count(html, "#000002")).toBe(2);
    } finally {
      setPalette(original);
    }
  });
});
