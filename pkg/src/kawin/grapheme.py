"""Phoneme inventory and lossless tokenization between surface text and phonemes.

The internal representation of Mapuzugun text is a sequence of phoneme ids.
Each of the three community orthographies (Ragileo, Unificado, Azümchefe) is a
table mapping phonemes to graphemes; tokenizing is greedy longest-match over
the table, rendering is plain concatenation. Phoneme ids are the lowercase
Ragileo letters, since Ragileo uses one letter per phoneme.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Union


class Orthography(enum.Enum):
    RAGILEO = "ragileo"
    UNIFICADO = "unificado"
    AZUMCHEFE = "azumchefe"

    @classmethod
    def parse(cls, value: Union[str, "Orthography"]) -> "Orthography":
        if isinstance(value, Orthography):
            return value
        key = unicodedata.normalize("NFC", str(value)).strip().lower()
        aliases = {
            "ragileo": cls.RAGILEO,
            "raguileo": cls.RAGILEO,
            "unificado": cls.UNIFICADO,
            "azumchefe": cls.AZUMCHEFE,
            "azümchefe": cls.AZUMCHEFE,
        }
        if key not in aliases:
            raise KawinError(f"unknown orthography: {value!r}")
        return aliases[key]


ALL_ORTHOGRAPHIES = (Orthography.RAGILEO, Orthography.UNIFICADO, Orthography.AZUMCHEFE)


class KawinError(Exception):
    """Base class for all errors raised by this package."""


class LoadError(KawinError):
    """A data file failed to parse or violated an invariant."""


class TokenizationError(KawinError):
    def __init__(self, text: str, offset: int, orthography: Orthography):
        self.text = text
        self.offset = offset
        self.orthography = orthography
        snippet = text[offset : offset + 8]
        super().__init__(
            f"no {orthography.value} grapheme matches {snippet!r} "
            f"at offset {offset} in {text!r}"
        )


class RenderError(KawinError):
    def __init__(self, phoneme: str, orthography: Orthography):
        self.phoneme = phoneme
        self.orthography = orthography
        super().__init__(
            f"phoneme {phoneme!r} has no grapheme and no fallback in {orthography.value}"
        )


@dataclass(frozen=True)
class Phone:
    """One phoneme occurrence; `upper` records capitalization of the first
    character of the grapheme it was read from."""

    id: str
    upper: bool = False


@dataclass(frozen=True)
class Raw:
    """Pass-through non-phoneme material (spaces, punctuation, digits)."""

    text: str


Unit = Union[Phone, Raw]


@dataclass(frozen=True)
class PhonemeString:
    units: tuple

    @property
    def phonemes(self) -> tuple:
        return tuple(u.id for u in self.units if isinstance(u, Phone))

    def lowered(self) -> "PhonemeString":
        return PhonemeString(
            tuple(Phone(u.id) if isinstance(u, Phone) else u for u in self.units)
        )

    def __len__(self) -> int:
        return len(self.units)

    def __add__(self, other: "PhonemeString") -> "PhonemeString":
        return PhonemeString(self.units + other.units)

    @classmethod
    def of(cls, ids: Iterable[str]) -> "PhonemeString":
        return cls(tuple(Phone(i) for i in ids))


def word_units(p: PhonemeString):
    """Split a PhonemeString into alternating runs: PhonemeString words and
    Raw separators, in order."""
    runs = []
    current: list = []
    for u in p.units:
        if isinstance(u, Phone):
            current.append(u)
        else:
            if current:
                runs.append(PhonemeString(tuple(current)))
                current = []
            runs.append(u)
    if current:
        runs.append(PhonemeString(tuple(current)))
    return runs


@dataclass(frozen=True)
class GraphemeTable:
    orthography: Orthography
    entries: dict  # phoneme id -> grapheme (lowercase, NFC)
    fallbacks: dict  # phoneme id -> grapheme, for unrepresented phonemes

    def grapheme_for(self, phoneme: str) -> Optional[str]:
        return self.entries.get(phoneme)

    @property
    def graphemes(self) -> dict:
        """grapheme -> phoneme id (injective by construction)."""
        return {g: p for p, g in self.entries.items()}


@dataclass(frozen=True)
class Inventory:
    phonemes: tuple  # ordered phoneme ids
    tables: dict  # Orthography -> GraphemeTable

    def table(self, orthography: Union[str, Orthography]) -> GraphemeTable:
        return self.tables[Orthography.parse(orthography)]


# The paper's appendix prints the interdental T with a typographic apostrophe.
_APOSTROPHES = {"’": "'", "ʼ": "'"}


def _normalize(text: str) -> str:
    text = unicodedata.normalize("NFC", text)
    for curly, plain in _APOSTROPHES.items():
        text = text.replace(curly, plain)
    return text


def load_inventory(path: Union[str, Path], unificado_plain_interdentals: bool = False) -> Inventory:
    """Load the phoneme file and build the three grapheme tables.

    With ``unificado_plain_interdentals`` the Unificado interdental graphemes
    (the ones carrying a combining low line) become unrepresented with the
    bare letter as fallback, matching texts that do not mark interdentals.
    This direction is lossy, like the Ragileo treatment of the interdental t.
    """
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    phonemes: list = []
    per_orth: dict = {o: {} for o in ALL_ORTHOGRAPHIES}
    fallbacks: dict = {o: {} for o in ALL_ORTHOGRAPHIES}
    seen_rows: dict = {o: {} for o in ALL_ORTHOGRAPHIES}

    for lineno, line in enumerate(lines, start=1):
        line = line.strip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) < 4:
            raise LoadError(f"{path}:{lineno}: expected at least 4 columns, got {len(cols)}")
        pid = _normalize(cols[0]).strip()
        if not pid:
            raise LoadError(f"{path}:{lineno}: missing phoneme id")
        if pid in phonemes:
            raise LoadError(f"{path}:{lineno}: duplicate phoneme id {pid!r}")
        phonemes.append(pid)
        declared = {}
        for orth, col in zip(ALL_ORTHOGRAPHIES, cols[1:4]):
            g = _normalize(col).strip().lower()
            if g == "-" or not g:
                continue
            declared[orth] = g
        for spec in (cols[4] if len(cols) > 4 else "").split():
            name, _, g = spec.partition("=")
            fallbacks[Orthography.parse(name)][pid] = _normalize(g).lower()
        if unificado_plain_interdentals and "̲" in declared.get(Orthography.UNIFICADO, ""):
            marked = declared.pop(Orthography.UNIFICADO)
            fallbacks[Orthography.UNIFICADO][pid] = marked.replace("̲", "")
        for orth, g in declared.items():
            if g in seen_rows[orth]:
                raise LoadError(
                    f"{path}:{lineno}: {orth.value} grapheme {g!r} already used by "
                    f"phoneme {seen_rows[orth][g]!r} (rows must be injective)"
                )
            seen_rows[orth][g] = pid
            per_orth[orth][pid] = g

    if not phonemes:
        raise LoadError(f"{path}: no phoneme rows")
    for orth in ALL_ORTHOGRAPHIES:
        for pid in phonemes:
            if pid not in per_orth[orth] and pid not in fallbacks[orth]:
                raise LoadError(
                    f"{path}: phoneme {pid!r} has neither a grapheme nor a "
                    f"declared fallback in {orth.value}"
                )

    tables = {
        orth: GraphemeTable(orth, dict(per_orth[orth]), dict(fallbacks[orth]))
        for orth in ALL_ORTHOGRAPHIES
    }
    return Inventory(tuple(phonemes), tables)


_DEFAULT_CACHE: dict = {}


def default_inventory(unificado_plain_interdentals: bool = False) -> Inventory:
    key = unificado_plain_interdentals
    if key not in _DEFAULT_CACHE:
        with resources.as_file(resources.files("kawin").joinpath("data/phonemes.tsv")) as p:
            _DEFAULT_CACHE[key] = load_inventory(p, unificado_plain_interdentals)
    return _DEFAULT_CACHE[key]


def _is_word_char(ch: str) -> bool:
    return ch.isalpha() or ch == "̲" or ch == "'"


def tokenize(
    text: str, orthography: Union[str, Orthography], inventory: Optional[Inventory] = None
) -> PhonemeString:
    """Greedy longest-match tokenization of surface text into phonemes.

    Matching is case-insensitive; the case flag records whether the first
    character of the matched grapheme was uppercase. Non-letter characters
    pass through as Raw units.
    """
    inv = inventory or default_inventory()
    orth = Orthography.parse(orthography)
    table = inv.table(orth)
    graphemes = table.graphemes
    max_len = max((len(g) for g in graphemes), default=1)

    text = _normalize(text)
    lower = text.lower()
    units: list = []
    i = 0
    n = len(text)
    while i < n:
        if not _is_word_char(text[i]):
            j = i
            while j < n and not _is_word_char(text[j]):
                j += 1
            units.append(Raw(text[i:j]))
            i = j
            continue
        matched = None
        for length in range(min(max_len, n - i), 0, -1):
            candidate = lower[i : i + length]
            if candidate in graphemes:
                matched = (graphemes[candidate], length)
                break
        if matched is None:
            raise TokenizationError(text, i, orth)
        pid, length = matched
        units.append(Phone(pid, upper=text[i].isupper()))
        i += length
    return PhonemeString(tuple(units))


@dataclass(frozen=True)
class RenderResult:
    text: str
    loss_notes: tuple  # (unit index, phoneme id) pairs

    @property
    def lossy(self) -> bool:
        return bool(self.loss_notes)

    def __str__(self) -> str:
        return self.text


def render(
    p: PhonemeString,
    orthography: Union[str, Orthography],
    inventory: Optional[Inventory] = None,
) -> RenderResult:
    """Render a PhonemeString in one orthography, reapplying case flags to the
    first character of each grapheme. Unrepresented phonemes use their
    declared fallback and are reported in loss_notes."""
    inv = inventory or default_inventory()
    orth = Orthography.parse(orthography)
    table = inv.table(orth)
    out: list = []
    losses: list = []
    for idx, u in enumerate(p.units):
        if isinstance(u, Raw):
            out.append(u.text)
            continue
        g = table.entries.get(u.id)
        if g is None:
            g = table.fallbacks.get(u.id)
            if g is None:
                raise RenderError(u.id, orth)
            losses.append((idx, u.id))
        if u.upper and g:
            g = g[0].upper() + g[1:]
        out.append(g)
    return RenderResult("".join(out), tuple(losses))
