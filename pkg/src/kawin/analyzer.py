"""Exhaustive segmentation of Ragileo-internal words into root(s) + suffixes.

The search is a depth-first prefix match over the lexicon: a root stem first,
optionally one incorporable root, then suffixes with strictly increasing
slots. Excludes-constraints prune eagerly; requires-constraints and the
ending rule are checked when the word is fully consumed. Every branch is
recorded in a derivation tree so callers can show learners why an analysis
failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .grapheme import PhonemeString
from .lexicon import Lexicon, RootEntry, SuffixEntry

DEFAULT_MAX_SEGMENTATIONS = 50

# Dead-end reasons recorded in the derivation tree.
NO_MATCH = "no-match"
SLOT_ORDER = "slot-order"
COMPATIBILITY = "compatibility"
NO_ENDING = "no-ending"


@dataclass(frozen=True)
class Piece:
    morph_id: str
    start: int
    end: int
    kind: str  # "root" | "incorporated" | "suffix" | "ending"


@dataclass(frozen=True)
class Segmentation:
    word: PhonemeString
    pieces: tuple

    @property
    def score(self) -> int:
        return len(self.pieces)

    def piece_phonemes(self, piece: Piece) -> PhonemeString:
        return PhonemeString(self.word.units[piece.start : piece.end])


@dataclass
class TreeNode:
    label: str  # morph id, or the word itself at the root node
    span: tuple  # (start, end)
    children: list = field(default_factory=list)
    status: str = "open"  # "open" | "complete" | "dead"
    reason: Optional[str] = None
    detail: str = ""


@dataclass(frozen=True)
class SegmentationResult:
    segmentations: tuple
    tree: TreeNode
    truncated: bool

    def failure_reasons(self) -> list:
        """Dead-end leaves as (reason, detail) pairs, deduplicated in order."""
        out: list = []
        seen = set()

        def walk(node: TreeNode):
            if node.status == "dead" and (node.reason, node.detail) not in seen:
                seen.add((node.reason, node.detail))
                out.append((node.reason, node.detail))
            for child in node.children:
                walk(child)

        walk(self.tree)
        return out


def _matches_at(word: tuple, offset: int, form: tuple) -> bool:
    return word[offset : offset + len(form)] == form


def _word_is_valid_end(root: RootEntry, pieces: list) -> Optional[str]:
    """Return a dead-end reason, or None when the completed piece list forms a
    valid word. Purely verbal roots need an ending; any word that carries
    suffixes must close with an ending when its root is purely verbal."""
    suffix_pieces = [p for p in pieces if p.kind in ("suffix", "ending")]
    if root.purely_verbal:
        if not suffix_pieces or suffix_pieces[-1].kind != "ending":
            return NO_ENDING
    return None


def segment(
    word: PhonemeString,
    lexicon: Lexicon,
    max_segmentations: int = DEFAULT_MAX_SEGMENTATIONS,
) -> SegmentationResult:
    """All valid segmentations of one Ragileo-internal word, plus the
    derivation tree. An unanalyzable word gives an empty list, never an
    error."""
    word = word.lowered()
    phones = word.phonemes
    n = len(phones)
    surface = "".join(phones)
    tree = TreeNode(surface, (0, n))
    found: list = []

    if n == 0:
        tree.status = "dead"
        tree.reason = NO_MATCH
        tree.detail = "empty word"
        return SegmentationResult((), tree, False)

    def finish(node: TreeNode, root: RootEntry, pieces: list, used: set):
        missing = set()
        for pid in used:
            missing |= lexicon.suffixes[pid].requires - used
        if missing:
            node.status = "dead"
            node.reason = COMPATIBILITY
            node.detail = f"missing required suffixes: {sorted(missing)}"
            return
        reason = _word_is_valid_end(root, pieces)
        if reason is not None:
            node.status = "dead"
            node.reason = reason
            node.detail = "a verbal word must close with an ending"
            return
        node.status = "complete"
        found.append(Segmentation(word, tuple(pieces)))

    def extend(node: TreeNode, root: RootEntry, offset: int, last_slot: int, pieces: list, used: set):
        if offset == n:
            finish(node, root, pieces, used)
            return
        matched_any = False
        for entry in lexicon.suffix_index.get(phones[offset], ()):
            form = entry.form.phonemes
            if not _matches_at(phones, offset, form):
                continue
            matched_any = True
            child = TreeNode(entry.id, (offset, offset + len(form)))
            node.children.append(child)
            if entry.slot <= last_slot:
                child.status = "dead"
                child.reason = SLOT_ORDER
                child.detail = (
                    f"slot {entry.slot} of {entry.id!r} does not follow slot {last_slot}"
                )
                continue
            blocker = next(
                (u for u in used if entry.id in lexicon.suffixes[u].excludes), None
            )
            if blocker is None and any(u in entry.excludes for u in used):
                blocker = next(u for u in used if u in entry.excludes)
            if blocker is not None:
                child.status = "dead"
                child.reason = COMPATIBILITY
                child.detail = f"{entry.id!r} cannot co-occur with {blocker!r}"
                continue
            kind = "ending" if entry.kind == "ending" else "suffix"
            pieces.append(Piece(entry.id, offset, offset + len(form), kind))
            extend(child, root, offset + len(form), entry.slot, pieces, used | {entry.id})
            pieces.pop()
        if not matched_any:
            leaf = TreeNode("", (offset, n))
            leaf.status = "dead"
            leaf.reason = NO_MATCH
            leaf.detail = f"no suffix matches {''.join(phones[offset:])!r}"
            node.children.append(leaf)

    def after_root(node: TreeNode, root: RootEntry, offset: int, pieces: list):
        if offset == n:
            finish(node, root, pieces, set())
        # one optional incorporated root, immediately after the verb/root stem
        if offset < n and len(pieces) == 1:
            for inc in lexicon.roots.values():
                if not inc.incorporable:
                    continue
                form = inc.stem.phonemes
                if not form or not _matches_at(phones, offset, form):
                    continue
                child = TreeNode(inc.id, (offset, offset + len(form)))
                node.children.append(child)
                pieces.append(Piece(inc.id, offset, offset + len(form), "incorporated"))
                after_root(child, root, offset + len(form), pieces)
                pieces.pop()
        if offset < n:
            extend(node, root, offset, 0, pieces, set())

    any_root = False
    for root in lexicon.roots.values():
        form = root.stem.phonemes
        if not form or not _matches_at(phones, 0, form):
            continue
        any_root = True
        child = TreeNode(root.id, (0, len(form)))
        tree.children.append(child)
        after_root(child, root, len(form), [Piece(root.id, 0, len(form), "root")])
    if not any_root:
        leaf = TreeNode("", (0, n))
        leaf.status = "dead"
        leaf.reason = NO_MATCH
        leaf.detail = f"no root stem is a prefix of {surface!r}"
        tree.children.append(leaf)

    found.sort(key=lambda s: (len(s.pieces), tuple(p.morph_id for p in s.pieces)))
    truncated = len(found) > max_segmentations
    return SegmentationResult(tuple(found[:max_segmentations]), tree, truncated)


def segment_phrase(
    words: list,
    lexicon: Lexicon,
    max_segmentations: int = DEFAULT_MAX_SEGMENTATIONS,
) -> list:
    """Independent per-word analysis; returns one SegmentationResult per word."""
    return [segment(w, lexicon, max_segmentations) for w in words]
