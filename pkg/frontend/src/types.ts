// Mirrors of the service's JSON payloads (docs/api.md in the backend repo).

export type OrthographyName = "ragileo" | "unificado" | "azumchefe";

export const ORTHOGRAPHIES: OrthographyName[] = [
  "ragileo",
  "unificado",
  "azumchefe",
];

export interface Conversion {
  text: string;
  lossy: boolean;
}

export interface GlossLine {
  surface: string;
  morph_ids: string[];
  gloss_es: string;
  gloss_en: string | null;
  tags: string[];
}

export interface SegPiece {
  morph_id: string;
  kind: "root" | "incorporated" | "suffix" | "ending";
  start: number;
  end: number;
  surface: string;
}

export interface Segmentation {
  word: string;
  display_orthography: OrthographyName;
  header: string;
  context_free: boolean;
  pieces: SegPiece[];
  lines: GlossLine[];
}

export interface WordFailure {
  reason: string;
  detail: string;
  offset?: number;
}

export interface WordResult {
  word: string;
  detected_orthographies: OrthographyName[];
  display_orthography: OrthographyName;
  conversions: Record<OrthographyName, Conversion>;
  segmentations: Segmentation[];
  truncated: boolean;
  failures: WordFailure[];
}

export interface AnalyzeResponse {
  text: string;
  orthography: {
    resolved: OrthographyName;
    override: boolean;
    conflict: boolean;
  };
  words: WordResult[];
  timing: { total_ms: number };
}

export interface DetectResponse {
  candidates: OrthographyName[];
  unanimous: boolean;
  conflict: boolean;
  per_word: { word: string; candidates: OrthographyName[] }[];
}

export interface ConvertResponse {
  text: string;
  from: OrthographyName;
  to: OrthographyName;
  lossy: boolean;
  loss_notes: [number, string][];
}

export interface ErrorEnvelope {
  error: { code: string; message: string; detail: unknown };
}
