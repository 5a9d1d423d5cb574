// Thin typed client over the backend JSON API. The fetch implementation is
// injectable so tests can run without a server.

import type {
  AnalyzeResponse,
  ConvertResponse,
  DetectResponse,
  ErrorEnvelope,
  OrthographyName,
} from "./types.js";

export class ApiError extends Error {
  code: string;
  status: number;
  detail: unknown;

  constructor(code: string, message: string, status: number, detail: unknown) {
    super(message);
    this.code = code;
    this.status = status;
    this.detail = detail;
  }
}

export interface AnalyzeOptions {
  inputOrthography?: OrthographyName | null;
  displayOrthography?: OrthographyName | null;
  maxSegmentations?: number | null;
}

export interface Api {
  analyze(text: string, options?: AnalyzeOptions): Promise<AnalyzeResponse>;
  detect(text: string): Promise<DetectResponse>;
  convert(
    text: string,
    from: OrthographyName,
    to: OrthographyName,
  ): Promise<ConvertResponse>;
}

type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export function createApi(baseUrl = "", fetchFn?: FetchLike): Api {
  const doFetch: FetchLike = fetchFn ?? ((url, init) => fetch(url, init));

  async function post<T>(path: string, body: unknown): Promise<T> {
    let resp: Response;
    try {
      resp = await doFetch(baseUrl + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError("network", String(err), 0, null);
    }
    if (!resp.ok) {
      let envelope: ErrorEnvelope | null = null;
      try {
        envelope = (await resp.json()) as ErrorEnvelope;
      } catch {
        // non-JSON error body: fall through to the generic error
      }
      if (envelope && envelope.error) {
        throw new ApiError(
          envelope.error.code,
          envelope.error.message,
          resp.status,
          envelope.error.detail,
        );
      }
      throw new ApiError("http", `HTTP ${resp.status}`, resp.status, null);
    }
    return (await resp.json()) as T;
  }

  return {
    analyze(text, options = {}) {
      return post<AnalyzeResponse>("/api/analyze", {
        text,
        input_orthography: options.inputOrthography ?? null,
        display_orthography: options.displayOrthography ?? null,
        max_segmentations: options.maxSegmentations ?? null,
      });
    },
    detect(text) {
      return post<DetectResponse>("/api/detect", { text });
    },
    convert(text, from, to) {
      return post<ConvertResponse>("/api/convert", { text, from, to });
    },
  };
}
