"""Conversion between orthographies and round-trip orthography detection.

Conversion goes through the phoneme representation: tokenize under the source
table, render under the target. Detection declares orthography X a candidate
when the text tokenizes under X and converting to each other orthography and
back reproduces the (case-normalized) input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

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


@dataclass(frozen=True)
class ConversionResult:
    text: str
    source: Orthography
    target: Orthography
    lossy: bool
    loss_notes: tuple  # (unit index, phoneme id)


class DetectionError(KawinError):
    """No orthography qualifies for the input."""

    def __init__(self, text: str, reasons: dict):
        self.text = text
        self.reasons = {o: r for o, r in reasons.items()}
        detail = "; ".join(f"{o.value}: {r}" for o, r in reasons.items())
        super().__init__(f"cannot detect the orthography of {text!r} ({detail})")


@dataclass(frozen=True)
class DetectionResult:
    candidates: frozenset  # of Orthography

    @property
    def unanimous(self) -> bool:
        return self.candidates == frozenset(ALL_ORTHOGRAPHIES)


@dataclass(frozen=True)
class DocumentDetection:
    candidates: frozenset
    conflict: bool
    per_word: tuple  # (word, DetectionResult) pairs

    @property
    def unanimous(self) -> bool:
        return not self.conflict and self.candidates == frozenset(ALL_ORTHOGRAPHIES)


def convert(
    text: str,
    source: Union[str, Orthography],
    target: Union[str, Orthography],
    inventory: Optional[Inventory] = None,
) -> ConversionResult:
    inv = inventory or default_inventory()
    src = Orthography.parse(source)
    dst = Orthography.parse(target)
    rendered = render(tokenize(text, src, inv), dst, inv)
    return ConversionResult(rendered.text, src, dst, rendered.lossy, rendered.loss_notes)


def _case_normalized(text: str, orthography: Orthography, inventory: Inventory) -> str:
    return render(tokenize(text, orthography, inventory), orthography, inventory).text


def detect(text: str, inventory: Optional[Inventory] = None) -> DetectionResult:
    inv = inventory or default_inventory()
    if not text.strip():
        raise KawinError("cannot detect the orthography of empty text")
    candidates = []
    reasons = {}
    for orth in ALL_ORTHOGRAPHIES:
        try:
            normalized = _case_normalized(text, orth, inv)
        except TokenizationError as exc:
            reasons[orth] = f"does not tokenize (offset {exc.offset})"
            continue
        mismatch = None
        for other in ALL_ORTHOGRAPHIES:
            if other is orth:
                continue
            try:
                there = convert(text, orth, other, inv)
                back = convert(there.text, other, orth, inv)
            except (TokenizationError, KawinError) as exc:
                mismatch = f"round trip via {other.value} failed: {exc}"
                break
            if back.text != normalized:
                mismatch = (
                    f"round trip via {other.value} gives {back.text!r}, "
                    f"not {normalized!r}"
                )
                break
        if mismatch is None:
            candidates.append(orth)
        else:
            reasons[orth] = mismatch
    if not candidates:
        raise DetectionError(text, reasons)
    return DetectionResult(frozenset(candidates))


def detect_document(
    words: Iterable[str], inventory: Optional[Inventory] = None
) -> DocumentDetection:
    """Detect the orthography of a multi-word input: intersection of the
    per-word candidate sets, falling back to a majority vote (with a conflict
    flag) when the intersection is empty."""
    inv = inventory or default_inventory()
    words = list(words)
    if not words:
        raise KawinError("cannot detect the orthography of an empty word list")
    per_word = []
    failures = 0
    for w in words:
        try:
            per_word.append((w, detect(w, inv)))
        except KawinError:
            per_word.append((w, None))
            failures += 1
    detected = [r for _, r in per_word if r is not None]
    if not detected:
        raise KawinError(f"no word in {words!r} has a detectable orthography")

    intersection = frozenset(ALL_ORTHOGRAPHIES)
    for r in detected:
        intersection &= r.candidates
    if intersection:
        return DocumentDetection(intersection, False, tuple(per_word))

    votes = {o: 0 for o in ALL_ORTHOGRAPHIES}
    for r in detected:
        for o in r.candidates:
            votes[o] += 1
    best = max(votes.values())
    winners = frozenset(o for o in ALL_ORTHOGRAPHIES if votes[o] == best)
    return DocumentDetection(winners, True, tuple(per_word))
