"""Morphological data: roots, suffixes with slots and compatibility
constraints, plain-language glosses, and combination rules.

All surface forms in the data files are written in the Ragileo orthography,
which is also the analyzer's internal representation. The loader tokenizes
every form (so a malformed entry fails at load time, with an offset) and
returns an immutable, cross-checked lexicon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .grapheme import (
    Inventory,
    LoadError,
    Orthography,
    PhonemeString,
    TokenizationError,
    default_inventory,
    tokenize,
)

POS_VALUES = ("vi", "vtr", "n", "adj", "adv")
VERBAL_POS = ("vi", "vtr")


@dataclass(frozen=True)
class RootEntry:
    id: str
    citation_form: PhonemeString
    stem: PhonemeString
    pos: tuple  # subset of POS_VALUES, nonempty
    incorporable: bool
    gloss_id: str

    @property
    def purely_verbal(self) -> bool:
        return all(p in VERBAL_POS for p in self.pos)


@dataclass(frozen=True)
class SuffixEntry:
    id: str
    form: PhonemeString
    slot: int
    kind: str  # "suffix" | "ending"
    gloss_id: str
    requires: frozenset
    excludes: frozenset


@dataclass(frozen=True)
class GlossEntry:
    id: str
    plain_es: str
    plain_en: Optional[str]
    tags: tuple


@dataclass(frozen=True)
class CombinationRule:
    id: str
    sequence: tuple  # suffix ids, length >= 2
    gloss_id: str


@dataclass(frozen=True)
class Lexicon:
    roots: dict  # id -> RootEntry, insertion-ordered
    suffixes: dict  # id -> SuffixEntry
    glosses: dict  # id -> GlossEntry
    combinations: tuple  # CombinationRules, longest sequence first
    suffix_index: dict = field(default_factory=dict)  # first phoneme -> tuple of SuffixEntry

    def morph(self, morph_id: str):
        return self.roots.get(morph_id) or self.suffixes[morph_id]


def _rows(path: Path, n_required: int, n_total: int):
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) < n_required:
            raise LoadError(f"{path}:{lineno}: expected at least {n_required} columns")
        cols += [""] * (n_total - len(cols))
        yield lineno, cols


def _ragileo(path: Path, lineno: int, form: str, inventory: Inventory) -> PhonemeString:
    try:
        return tokenize(form, Orthography.RAGILEO, inventory).lowered()
    except TokenizationError as exc:
        raise LoadError(
            f"{path}:{lineno}: {form!r} is not Ragileo-tokenizable (offset {exc.offset})"
        ) from exc


def _idset(raw: str) -> frozenset:
    return frozenset(x for x in raw.split(";") if x.strip())


def load_lexicon(data_dir: Union[str, Path], inventory: Optional[Inventory] = None) -> Lexicon:
    inv = inventory or default_inventory()
    data_dir = Path(data_dir)

    glosses: dict = {}
    gpath = data_dir / "glosses.tsv"
    for lineno, cols in _rows(gpath, 2, 4):
        gid, es, en, tags = (c.strip() for c in cols[:4])
        if not gid or gid in glosses:
            raise LoadError(f"{gpath}:{lineno}: missing or duplicate gloss id {gid!r}")
        if not es:
            raise LoadError(f"{gpath}:{lineno}: gloss {gid!r} has an empty Spanish definition")
        glosses[gid] = GlossEntry(gid, es, en or None, tuple(t for t in tags.split(";") if t))

    roots: dict = {}
    rpath = data_dir / "roots.tsv"
    for lineno, cols in _rows(rpath, 6, 6):
        rid, citation, stem, pos_raw, incorp, gloss_id = (c.strip() for c in cols[:6])
        if not rid or rid in roots:
            raise LoadError(f"{rpath}:{lineno}: missing or duplicate root id {rid!r}")
        pos = tuple(p for p in pos_raw.split(";") if p)
        if not pos or any(p not in POS_VALUES for p in pos):
            raise LoadError(f"{rpath}:{lineno}: bad pos {pos_raw!r} (allowed: {POS_VALUES})")
        if gloss_id not in glosses:
            raise LoadError(f"{rpath}:{lineno}: root {rid!r} references unknown gloss {gloss_id!r}")
        stem_p = _ragileo(rpath, lineno, stem, inv)
        if not stem_p.phonemes:
            raise LoadError(f"{rpath}:{lineno}: root {rid!r} has an empty stem")
        roots[rid] = RootEntry(
            rid,
            _ragileo(rpath, lineno, citation.rstrip("-"), inv),
            stem_p,
            pos,
            incorp == "1",
            gloss_id,
        )

    suffixes: dict = {}
    spath = data_dir / "suffixes.tsv"
    for lineno, cols in _rows(spath, 5, 7):
        sid, form, slot_raw, kind, gloss_id, req, exc = (c.strip() for c in cols[:7])
        if not sid or sid in suffixes:
            raise LoadError(f"{spath}:{lineno}: missing or duplicate suffix id {sid!r}")
        try:
            slot = int(slot_raw)
        except ValueError:
            slot = 0
        if slot < 1:
            raise LoadError(f"{spath}:{lineno}: suffix {sid!r} slot must be a positive integer")
        if kind not in ("suffix", "ending"):
            raise LoadError(f"{spath}:{lineno}: suffix {sid!r} kind must be suffix or ending")
        if gloss_id not in glosses:
            raise LoadError(f"{spath}:{lineno}: suffix {sid!r} references unknown gloss {gloss_id!r}")
        form_p = _ragileo(spath, lineno, form, inv)
        if not form_p.phonemes:
            raise LoadError(f"{spath}:{lineno}: suffix {sid!r} has an empty form")
        requires, excludes = _idset(req), _idset(exc)
        if requires & excludes:
            raise LoadError(f"{spath}:{lineno}: suffix {sid!r} requires and excludes overlap")
        if sid in requires or sid in excludes:
            raise LoadError(f"{spath}:{lineno}: suffix {sid!r} references itself")
        suffixes[sid] = SuffixEntry(sid, form_p, slot, kind, gloss_id, requires, excludes)

    if not suffixes:
        raise LoadError(f"{spath}: no suffixes loaded (the analyzer needs endings)")
    max_slot = max(s.slot for s in suffixes.values())
    for s in suffixes.values():
        for ref in s.requires | s.excludes:
            if ref not in suffixes:
                raise LoadError(f"{spath}: suffix {s.id!r} references unknown suffix {ref!r}")
        if s.kind == "ending" and s.slot < max_slot:
            raise LoadError(
                f"{spath}: ending {s.id!r} has slot {s.slot} below the maximal slot {max_slot}"
            )

    combos: list = []
    seen_seq = set()
    cpath = data_dir / "combos.tsv"
    if cpath.exists():
        for lineno, cols in _rows(cpath, 3, 3):
            cid, seq_raw, gloss_id = (c.strip() for c in cols[:3])
            seq = tuple(x for x in seq_raw.split(";") if x)
            if len(seq) < 2:
                raise LoadError(f"{cpath}:{lineno}: rule {cid!r} needs at least 2 suffixes")
            if seq in seen_seq:
                raise LoadError(f"{cpath}:{lineno}: duplicate sequence {seq!r}")
            seen_seq.add(seq)
            for ref in seq:
                if ref not in suffixes:
                    raise LoadError(f"{cpath}:{lineno}: rule {cid!r} references unknown suffix {ref!r}")
            if gloss_id not in glosses:
                raise LoadError(f"{cpath}:{lineno}: rule {cid!r} references unknown gloss {gloss_id!r}")
            combos.append(CombinationRule(cid, seq, gloss_id))
    combos.sort(key=lambda c: (-len(c.sequence), c.id))

    index: dict = {}
    for s in suffixes.values():
        index.setdefault(s.form.phonemes[0], []).append(s)
    suffix_index = {ph: tuple(entries) for ph, entries in index.items()}

    return Lexicon(roots, suffixes, glosses, tuple(combos), suffix_index)


def default_lexicon_dir() -> Path:
    return Path(resources.files("kawin").joinpath("data"))  # type: ignore[arg-type]


_DEFAULT: dict = {}


def default_lexicon() -> Lexicon:
    if "lex" not in _DEFAULT:
        _DEFAULT["lex"] = load_lexicon(default_lexicon_dir())
    return _DEFAULT["lex"]


def validate_lexicon(lexicon: Lexicon) -> list:
    """Non-fatal consistency checks; returns a list of warning strings."""
    warnings: list = []
    by_form_slot: dict = {}
    for s in lexicon.suffixes.values():
        by_form_slot.setdefault((s.form.phonemes, s.slot), []).append(s.id)
    for (form, slot), ids in sorted(by_form_slot.items()):
        if len(ids) > 1:
            surface = "".join(form)
            warnings.append(
                f"suffixes {sorted(ids)} share form {surface!r} and slot {slot} "
                "(every match will be ambiguous)"
            )
    for rule in lexicon.combinations:
        slots = [lexicon.suffixes[sid].slot for sid in rule.sequence]
        if any(b <= a for a, b in zip(slots, slots[1:])):
            warnings.append(
                f"combination rule {rule.id!r} is unreachable: slots {slots} "
                "are not strictly increasing"
            )
    referenced = {r.gloss_id for r in lexicon.roots.values()}
    referenced |= {s.gloss_id for s in lexicon.suffixes.values()}
    referenced |= {c.gloss_id for c in lexicon.combinations}
    for gid in lexicon.glosses:
        if gid not in referenced:
            warnings.append(f"gloss {gid!r} is never referenced")
    return warnings
