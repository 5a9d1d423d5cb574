"""Independent re-validation of segmentations.

Deliberately not the analyzer's own logic: this checks every rule from
scratch on the finished piece list, so a search bug cannot hide behind the
search's own pruning.
"""

from kawin.analyzer import Segmentation
from kawin.lexicon import Lexicon, RootEntry, SuffixEntry

#: every segmentation validated anywhere in the suite, for the acceptance
#: re-check ("zero violations, nonzero sample").
VALIDATED_COUNT = 0
VIOLATIONS = []


def validate_segmentation(seg: Segmentation, lexicon: Lexicon) -> list:
    """All rule violations of one segmentation (empty list = valid)."""
    problems = []
    phones = seg.word.phonemes
    pieces = list(seg.pieces)

    # spans partition the word
    cursor = 0
    for p in pieces:
        if p.start != cursor:
            problems.append(f"span gap/overlap at {p.morph_id}: {p.start} != {cursor}")
        cursor = p.end
    if cursor != len(phones):
        problems.append(f"spans cover {cursor} of {len(phones)} phonemes")

    # each span reproduces the morph's form
    for p in pieces:
        morph = lexicon.roots.get(p.morph_id) or lexicon.suffixes.get(p.morph_id)
        if morph is None:
            problems.append(f"unknown morph {p.morph_id!r}")
            continue
        form = morph.stem.phonemes if isinstance(morph, RootEntry) else morph.form.phonemes
        if phones[p.start : p.end] != form:
            problems.append(f"span of {p.morph_id!r} does not spell its form")

    # structure: root, optional incorporated root, then suffixes
    if not pieces or pieces[0].morph_id not in lexicon.roots:
        problems.append("piece 0 is not a root")
        return problems
    root = lexicon.roots[pieces[0].morph_id]
    rest = pieces[1:]
    if rest and rest[0].morph_id in lexicon.roots:
        inc = lexicon.roots[rest[0].morph_id]
        if not inc.incorporable:
            problems.append(f"root {inc.id!r} is not incorporable")
        rest = rest[1:]

    suffixes = []
    for p in rest:
        if p.morph_id not in lexicon.suffixes:
            problems.append(f"{p.morph_id!r} is not a suffix")
            return problems
        suffixes.append(lexicon.suffixes[p.morph_id])

    # strict slot monotonicity
    for a, b in zip(suffixes, suffixes[1:]):
        if b.slot <= a.slot:
            problems.append(f"slots not increasing: {a.id}({a.slot}) -> {b.id}({b.slot})")

    # requires / excludes over the whole word
    used = {s.id for s in suffixes}
    for s in suffixes:
        missing = s.requires - used
        if missing:
            problems.append(f"{s.id!r} requires {sorted(missing)}")
        hit = s.excludes & used
        if hit:
            problems.append(f"{s.id!r} excludes {sorted(hit)}")

    # purely verbal roots close with an ending
    if all(p in ("vi", "vtr") for p in root.pos):
        if not suffixes or suffixes[-1].kind != "ending":
            problems.append(f"verbal root {root.id!r} lacks a final ending")

    return problems


def checked(result, lexicon: Lexicon):
    """Validate every segmentation in a SegmentationResult; raises on any
    violation and feeds the global acceptance counters."""
    global VALIDATED_COUNT
    for seg in result.segmentations:
        problems = validate_segmentation(seg, lexicon)
        if problems:
            VIOLATIONS.append((seg, problems))
        VALIDATED_COUNT += 1
    assert not VIOLATIONS, VIOLATIONS
    return result
