import { describe, expect, it } from "vitest";

import { ApiError, createApi } from "../src/api.js";

function fakeFetch(status: number, body: unknown) {
  const calls: { url: string; init: RequestInit }[] = [];
  const fn = async (url: string, init: RequestInit) => {
    calls.push({ url, init });
    return {
      ok: status >= 200 && status < 300,
      status,
      json: async () => body,
    } as Response;
  };
  return { fn, calls };
}

describe("createApi", () => {
  it("posts the analyze body with snake_case fields", async () => {
    const { fn, calls } = fakeFetch(200, { words: [] });
    const api = createApi("http://x", fn);
    await api.analyze("ruka", { displayOrthography: "unificado" });
    expect(calls[0].url).toBe("http://x/api/analyze");
    expect(JSON.parse(calls[0].init.body as string)).toEqual({
      text: "ruka",
      input_orthography: null,
      display_orthography: "unificado",
      max_segmentations: null,
    });
  });

  it("posts convert with from/to keys", async () => {
    const { fn, calls } = fakeFetch(200, {});
    await createApi("", fn).convert("Jampvzken", "ragileo", "unificado");
    expect(calls[0].url).toBe("/api/convert");
    expect(JSON.parse(calls[0].init.body as string)).toEqual({
      text: "Jampvzken",
      from: "ragileo",
      to: "unificado",
    });
  });

  it("returns the parsed payload", async () => {
    const { fn } = fakeFetch(200, { candidates: ["ragileo"] });
    const result = await createApi("", fn).detect("Jampvzken");
    expect(result.candidates).toEqual(["ragileo"]);
  });

  it("maps the error envelope to ApiError", async () => {
    const { fn } = fakeFetch(422, {
      error: { code: "undetectable", message: "pick one", detail: null },
    });
    const err = await createApi("", fn)
      .analyze("qüx")
      .catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).code).toBe("undetectable");
    expect((err as ApiError).status).toBe(422);
  });

  it("survives non-JSON error bodies", async () => {
    const fn = async () =>
      ({
        ok: false,
        status: 502,
        json: async () => {
          throw new Error("not json");
        },
      }) as unknown as Response;
    const err = await createApi("", fn)
      .detect("x")
      .catch((e: unknown) => e);
    expect((err as ApiError).code).toBe("http");
  });

  it("wraps network failures", async () => {
    const fn = async () => {
      throw new Error("refused");
    };
    const err = await createApi("", fn)
      .detect("x")
      .catch((e: unknown) => e);
    expect((err as ApiError).code).toBe("network");
  });
});
