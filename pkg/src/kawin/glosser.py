"""The informal analysis translator: per-morpheme plain-language definitions.

Each segmentation piece gets its dictionary definition; consecutive suffixes
covered by a combination rule collapse into one line with the combined
definition (greedy, longest rule first, leftmost first). Surfaces are
rendered in the caller's display orthography. The output is deliberately not
a translation: the learner composes the meaning.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Union

from .grapheme import Inventory, KawinError, Orthography, default_inventory, render
from .lexicon import GlossEntry, Lexicon, RootEntry
from .analyzer import Segmentation, SegmentationResult


@dataclass(frozen=True)
class GlossLine:
    surface: str
    morph_ids: tuple
    gloss: GlossEntry
    tags: tuple


@dataclass(frozen=True)
class GlossedAnalysis:
    segmentation: Segmentation
    lines: tuple
    display_orthography: Orthography
    # One definition per morpheme, independent of sentence context.
    context_free: bool = True


def _piece_surface(
    seg: Segmentation, pieces, display: Orthography, inventory: Inventory
) -> str:
    out = []
    for piece in pieces:
        out.append(render(seg.piece_phonemes(piece), display, inventory).text)
    return "".join(out)


def _decorate(surface: str, first: bool, last: bool) -> str:
    prefix = "" if first else "-"
    suffix = "" if last else "-"
    return prefix + surface + suffix


def gloss(
    seg: Segmentation,
    lexicon: Lexicon,
    display: Union[str, Orthography],
    inventory: Optional[Inventory] = None,
) -> GlossedAnalysis:
    inv = inventory or default_inventory()
    display = Orthography.parse(display)
    pieces = list(seg.pieces)

    # Group pieces: combination rules apply to consecutive suffix pieces only.
    groups: list = []  # (pieces, morph_ids, gloss_id, tags)
    i = 0
    while i < len(pieces):
        piece = pieces[i]
        matched_rule = None
        if piece.kind in ("suffix", "ending"):
            for rule in lexicon.combinations:  # longest first
                k = len(rule.sequence)
                window = pieces[i : i + k]
                if len(window) == k and tuple(p.morph_id for p in window) == rule.sequence:
                    matched_rule = (rule, window)
                    break
        if matched_rule is not None:
            rule, window = matched_rule
            entry = lexicon.glosses[rule.gloss_id]
            groups.append((window, rule.sequence, entry, entry.tags))
            i += len(window)
            continue
        morph = lexicon.morph(piece.morph_id)
        if morph.gloss_id not in lexicon.glosses:
            raise KawinError(f"morph {piece.morph_id!r} has a dangling gloss id {morph.gloss_id!r}")
        entry = lexicon.glosses[morph.gloss_id]
        tags = morph.pos if isinstance(morph, RootEntry) else entry.tags
        groups.append(([piece], (piece.morph_id,), entry, tuple(tags)))
        i += 1

    lines = []
    for gi, (group, morph_ids, entry, tags) in enumerate(groups):
        first = gi == 0
        last = gi == len(groups) - 1
        piece = group[0]
        if piece.kind == "root" and not last:
            # show the citation form the way dictionaries print it: stem plus
            # the parenthesized citation-only tail, e.g. "txeka(n)-"
            root = lexicon.roots[piece.morph_id]
            stem_text = render(root.stem, display, inv).text
            citation = root.citation_form.phonemes
            tail = citation[len(root.stem.phonemes) :] if citation[: len(root.stem.phonemes)] == root.stem.phonemes else ()
            surface = stem_text
            if tail:
                from .grapheme import PhonemeString

                surface += "(" + render(PhonemeString.of(tail), display, inv).text + ")"
            surface = _decorate(surface, first, last)
        else:
            surface = _decorate(_piece_surface(seg, group, display, inv), first, last)
        lines.append(GlossLine(surface, tuple(morph_ids), entry, tags))

    return GlossedAnalysis(seg, tuple(lines), display)


def _line_gloss_text(line: GlossLine, include_english: bool) -> str:
    text = line.gloss.plain_es
    if line.tags:
        text = " & ".join(line.tags) + " " + text
    if include_english and line.gloss.plain_en:
        text += f" ({line.gloss.plain_en})"
    return text


def analysis_header(
    g: GlossedAnalysis, inventory: Optional[Inventory] = None
) -> str:
    """The hyphenated word, e.g. "txeka-yaw-ke-la-i", in the display
    orthography."""
    inv = inventory or default_inventory()
    seg = g.segmentation
    return "-".join(
        render(seg.piece_phonemes(p), g.display_orthography, inv).text for p in seg.pieces
    )


def format_analysis(
    g: GlossedAnalysis,
    format: str = "text",
    include_english: bool = False,
    inventory: Optional[Inventory] = None,
) -> str:
    if format == "json":
        return json.dumps(analysis_to_dict(g, inventory), ensure_ascii=False, indent=2)
    if format != "text":
        raise KawinError(f"unknown format {format!r} (expected 'text' or 'json')")
    inv = inventory or default_inventory()
    header = analysis_header(g, inv)
    width = max(len(line.surface) for line in g.lines)
    rows = [header]
    for line in g.lines:
        rows.append(f"{line.surface.ljust(width)}  {_line_gloss_text(line, include_english)}")
    return "\n".join(rows)


def format_no_analysis(result: SegmentationResult, language_strings: dict) -> str:
    rows = [language_strings["no_analysis"]]
    for reason, detail in result.failure_reasons():
        rows.append(f"  [{reason}] {detail}")
    return "\n".join(rows)


def analysis_to_dict(g: GlossedAnalysis, inventory: Optional[Inventory] = None) -> dict:
    inv = inventory or default_inventory()
    seg = g.segmentation
    return {
        "word": "".join(seg.word.phonemes),
        "display_orthography": g.display_orthography.value,
        "header": analysis_header(g, inv),
        "context_free": g.context_free,
        "pieces": [
            {
                "morph_id": p.morph_id,
                "kind": p.kind,
                "start": p.start,
                "end": p.end,
                "surface": render(seg.piece_phonemes(p), g.display_orthography, inv).text,
            }
            for p in seg.pieces
        ],
        "lines": [
            {
                "surface": line.surface,
                "morph_ids": list(line.morph_ids),
                "gloss_es": line.gloss.plain_es,
                "gloss_en": line.gloss.plain_en,
                "tags": list(line.tags),
            }
            for line in g.lines
        ],
    }


def analysis_from_dict(data: dict, lexicon: Lexicon, inventory: Optional[Inventory] = None) -> GlossedAnalysis:
    """Rebuild a GlossedAnalysis from its JSON form (the segmentation is
    reconstructed against the same lexicon)."""
    from .grapheme import PhonemeString
    from .analyzer import Piece

    word = PhonemeString.of(tuple(data["word"]))
    # phoneme ids are single Ragileo letters except t'; re-tokenize instead
    from .grapheme import tokenize

    word = tokenize(data["word"], Orthography.RAGILEO, inventory or default_inventory()).lowered()
    pieces = tuple(
        Piece(p["morph_id"], p["start"], p["end"], p["kind"]) for p in data["pieces"]
    )
    seg = Segmentation(word, pieces)
    return gloss(seg, lexicon, data["display_orthography"], inventory)
