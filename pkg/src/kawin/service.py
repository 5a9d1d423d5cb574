"""The full pipeline (detect -> convert -> segment -> gloss) and the HTTP
service exposing it. The CLI `analyze --json` output and the POST
/api/analyze body are the same payload, produced by run_pipeline.
"""

from __future__ import annotations

import hashlib
import re
import time
from dataclasses import dataclass
from typing import Optional, Union

from . import __version__
from .analyzer import segment
from .config import ServiceConfig
from .glosser import analysis_to_dict, gloss
from .grapheme import (
    ALL_ORTHOGRAPHIES,
    Inventory,
    KawinError,
    Orthography,
    PhonemeString,
    TokenizationError,
    default_inventory,
    render,
    tokenize,
)
from .lexicon import Lexicon, load_lexicon
from .messages import catalog
from .orthography import detect


from pydantic import BaseModel, ConfigDict, Field


class DetectBody(BaseModel):
    text: str


class ConvertBody(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    text: str
    source: str = Field(alias="from")
    target: str = Field(alias="to")


class AnalyzeBody(BaseModel):
    text: str
    input_orthography: Optional[str] = None
    display_orthography: Optional[str] = None
    max_segmentations: Optional[int] = None


class ValidationFailure(KawinError):
    """Bad request input (empty text, bad parameters)."""


class OversizeInput(KawinError):
    """Input exceeds the configured character limit."""


class UndetectableInput(KawinError):
    """Orthography cannot be resolved and no override was given."""


@dataclass(frozen=True)
class AnalyzeRequest:
    text: str
    input_orthography: Optional[Orthography] = None
    display_orthography: Optional[Orthography] = None
    max_segmentations: Optional[int] = None


_WORD_RE = re.compile(r"[^\W\d_]+(?:[̲'][^\W\d_]*)*", re.UNICODE)


def split_words(text: str) -> list:
    """Word tokens in order (punctuation and whitespace are skipped; the
    per-word results keep the original order)."""
    return _WORD_RE.findall(text)


def _readings(words: list, orthography: Orthography, inventory: Inventory) -> dict:
    """word -> PhonemeString under one orthography, for the words that
    tokenize; missing words did not tokenize."""
    out = {}
    for w in words:
        try:
            out[w] = tokenize(w, orthography, inventory).lowered()
        except TokenizationError:
            pass
    return out


def _resolve_orthography(
    words: list,
    per_word: dict,
    override: Optional[Orthography],
    lexicon: Lexicon,
    inventory: Inventory,
    max_segmentations: int,
):
    """Pick the working orthography. Precedence: explicit override, then a
    unique document-level candidate; ties between candidates that read the
    text identically are harmless, and remaining ties are broken in favor of
    the reading that analyzes the most words."""
    if override is not None:
        return override, False
    candidate_sets = [c for c in per_word.values() if c]
    if not candidate_sets:
        raise UndetectableInput("no word has a detectable orthography")
    intersection = set(ALL_ORTHOGRAPHIES)
    for c in candidate_sets:
        intersection &= c
    conflict = False
    if not intersection:
        conflict = True
        votes = {o: sum(1 for c in candidate_sets if o in c) for o in ALL_ORTHOGRAPHIES}
        best = max(votes.values())
        intersection = {o for o in ALL_ORTHOGRAPHIES if votes[o] == best}
    ordered = [o for o in ALL_ORTHOGRAPHIES if o in intersection]
    if len(ordered) == 1:
        return ordered[0], conflict

    scored = []
    for orth in ordered:
        readings = _readings(words, orth, inventory)
        key = tuple(sorted((w, r.phonemes) for w, r in readings.items()))
        analyzed = sum(
            1
            for r in readings.values()
            if segment(r, lexicon, max_segmentations).segmentations
        )
        scored.append((analyzed, orth, key))
    distinct_keys = {key for _, _, key in scored}
    if len(distinct_keys) == 1:
        return ordered[0], conflict
    best = max(a for a, _, _ in scored)
    winner = next(o for a, o, _ in scored if a == best)
    return winner, conflict


def run_pipeline(
    req: AnalyzeRequest,
    lexicon: Lexicon,
    inventory: Optional[Inventory] = None,
    config: Optional[ServiceConfig] = None,
) -> dict:
    inv = inventory or default_inventory()
    cfg = config or ServiceConfig()
    strings = catalog(cfg.message_language)
    started = time.perf_counter()

    text = (req.text or "").strip()
    if not text:
        raise ValidationFailure(strings["empty_text"])
    if len(text) > cfg.max_input_chars:
        raise OversizeInput(strings["too_long"])
    cap = cfg.max_segmentations
    if req.max_segmentations is not None:
        if req.max_segmentations < 1 or req.max_segmentations > cfg.segmentation_cap:
            raise ValidationFailure(
                f"max_segmentations must be between 1 and {cfg.segmentation_cap}"
            )
        cap = req.max_segmentations

    words = split_words(text)
    if not words:
        raise ValidationFailure(strings["empty_text"])

    per_word_candidates = {}
    for w in words:
        try:
            per_word_candidates[w] = set(detect(w, inv).candidates)
        except KawinError:
            per_word_candidates[w] = set()

    try:
        resolved, conflict = _resolve_orthography(
            words, per_word_candidates, req.input_orthography, lexicon, inv, cap
        )
    except UndetectableInput as exc:
        raise UndetectableInput(f"{strings['specify_orthography']} ({exc})") from exc

    display = req.display_orthography or cfg.default_display or resolved
    word_results = []
    for w in words:
        entry = {
            "word": w,
            "detected_orthographies": [
                o.value for o in ALL_ORTHOGRAPHIES if o in per_word_candidates[w]
            ],
            "display_orthography": display.value,
            "conversions": {},
            "segmentations": [],
            "truncated": False,
            "failures": [],
        }
        try:
            cased = tokenize(w, resolved, inv)
        except TokenizationError as exc:
            entry["failures"].append(
                {"reason": "tokenization", "detail": str(exc), "offset": exc.offset}
            )
            word_results.append(entry)
            continue
        internal = cased.lowered()
        for orth in ALL_ORTHOGRAPHIES:
            rendered = render(cased, orth, inv)
            entry["conversions"][orth.value] = {
                "text": rendered.text,
                "lossy": rendered.lossy,
            }
        result = segment(internal, lexicon, cap)
        entry["truncated"] = result.truncated
        if result.segmentations:
            entry["segmentations"] = [
                analysis_to_dict(gloss(s, lexicon, display, inv), inv)
                for s in result.segmentations
            ]
        else:
            entry["failures"] = [
                {"reason": reason, "detail": detail}
                for reason, detail in result.failure_reasons()
            ]
        word_results.append(entry)

    return {
        "text": text,
        "orthography": {
            "resolved": resolved.value,
            "override": req.input_orthography is not None,
            "conflict": conflict,
        },
        "words": word_results,
        "timing": {"total_ms": round((time.perf_counter() - started) * 1000, 3)},
    }


def lexicon_fingerprint(data_dir) -> str:
    digest = hashlib.sha256()
    from pathlib import Path

    for name in ("phonemes.tsv", "roots.tsv", "suffixes.tsv", "glosses.tsv", "combos.tsv"):
        p = Path(data_dir) / name
        if p.exists():
            digest.update(name.encode())
            digest.update(p.read_bytes())
    return digest.hexdigest()[:16]


def create_app(config: Optional[ServiceConfig] = None):
    """FastAPI application over one immutable lexicon snapshot."""
    from fastapi import FastAPI, Request
    from fastapi.responses import JSONResponse

    cfg = config or ServiceConfig()
    data_dir = cfg.resolved_data_dir()
    inventory = default_inventory()
    lexicon = load_lexicon(data_dir, inventory)
    fingerprint = lexicon_fingerprint(data_dir)

    app = FastAPI(title="kawin", version=__version__)

    def envelope(code: str, message: str, detail=None, status: int = 400):
        return JSONResponse(
            status_code=status,
            content={"error": {"code": code, "message": message, "detail": detail}},
        )

    @app.exception_handler(KawinError)
    async def kawin_error_handler(request: Request, exc: KawinError):
        if isinstance(exc, OversizeInput):
            return envelope("oversize", str(exc), status=413)
        if isinstance(exc, (ValidationFailure,)):
            return envelope("validation", str(exc), status=400)
        if isinstance(exc, UndetectableInput):
            return envelope("undetectable", str(exc), status=422)
        if isinstance(exc, TokenizationError):
            return envelope(
                "tokenization", str(exc), detail={"offset": exc.offset}, status=422
            )
        return envelope("error", str(exc), status=422)

    from fastapi.exceptions import RequestValidationError

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return envelope("validation", "invalid request body", detail=exc.errors(), status=400)

    @app.get("/api/health")
    async def health():
        return {
            "status": "ok",
            "version": __version__,
            "lexicon_fingerprint": fingerprint,
        }

    @app.post("/api/detect")
    async def detect_endpoint(body: DetectBody):
        from .orthography import detect_document

        text = body.text.strip()
        if not text:
            raise ValidationFailure(catalog(cfg.message_language)["empty_text"])
        if len(text) > cfg.max_input_chars:
            raise OversizeInput(catalog(cfg.message_language)["too_long"])
        words = split_words(text)
        if not words:
            raise ValidationFailure(catalog(cfg.message_language)["empty_text"])
        doc = detect_document(words, inventory)
        return {
            "candidates": [o.value for o in ALL_ORTHOGRAPHIES if o in doc.candidates],
            "unanimous": doc.unanimous,
            "conflict": doc.conflict,
            "per_word": [
                {
                    "word": w,
                    "candidates": [
                        o.value for o in ALL_ORTHOGRAPHIES if r and o in r.candidates
                    ],
                }
                for w, r in doc.per_word
            ],
        }

    @app.post("/api/convert")
    async def convert_endpoint(body: ConvertBody):
        from .orthography import convert

        if not body.text.strip():
            raise ValidationFailure(catalog(cfg.message_language)["empty_text"])
        if len(body.text) > cfg.max_input_chars:
            raise OversizeInput(catalog(cfg.message_language)["too_long"])
        result = convert(body.text, body.source, body.target, inventory)
        return {
            "text": result.text,
            "from": result.source.value,
            "to": result.target.value,
            "lossy": result.lossy,
            "loss_notes": [[i, p] for i, p in result.loss_notes],
        }

    @app.post("/api/analyze")
    async def analyze_endpoint(body: AnalyzeBody):
        req = AnalyzeRequest(
            text=body.text,
            input_orthography=(
                Orthography.parse(body.input_orthography)
                if body.input_orthography
                else None
            ),
            display_orthography=(
                Orthography.parse(body.display_orthography)
                if body.display_orthography
                else None
            ),
            max_segmentations=body.max_segmentations,
        )
        return run_pipeline(req, lexicon, inventory, cfg)

    if cfg.static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=cfg.static_dir, html=True), name="static")

    return app


def serve(config: Optional[ServiceConfig] = None):
    """Run the HTTP service until interrupted. Startup failures (bad data
    dir, busy port) propagate as exceptions; the CLI maps them to exit 2."""
    import uvicorn

    cfg = config or ServiceConfig()
    app = create_app(cfg)
    uvicorn.run(app, host="0.0.0.0", port=cfg.port, log_level="info")
