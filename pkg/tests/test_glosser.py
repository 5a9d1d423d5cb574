import json

import pytest

from kawin.analyzer import segment
from kawin.glosser import (
    analysis_from_dict,
    analysis_header,
    analysis_to_dict,
    format_analysis,
    format_no_analysis,
    gloss,
)
from kawin.grapheme import KawinError, Orthography, tokenize
from kawin.lexicon import CombinationRule, Lexicon
from kawin.messages import catalog

RAGILEO = Orthography.RAGILEO
UNIFICADO = Orthography.UNIFICADO
AZUMCHEFE = Orthography.AZUMCHEFE


def ragileo(word):
    return tokenize(word, RAGILEO).lowered()


def best(word, lexicon):
    return segment(ragileo(word), lexicon).segmentations[0]


class TestGoldenGloss:
    def test_habitual_negative_block(self, lexicon):
        g = gloss(best("xekayawkelai", lexicon), lexicon, AZUMCHEFE)
        assert analysis_header(g) == "txeka-yaw-ke-la-i"
        assert len(g.lines) == 5
        surfaces = [line.surface for line in g.lines]
        assert surfaces == ["txeka(n)-", "-yaw-", "-ke-", "-la-", "-i"]
        texts = [line.gloss.plain_es for line in g.lines]
        assert "caminar, marchar, pasear" in texts[0]
        assert texts[1] == "andar"
        assert texts[2] == "habitualmente"
        assert "negación" in texts[3]
        assert texts[4] == "el / ella"
        assert g.lines[0].tags == ("vi", "vtr")

    def test_incorporated_word_header(self, lexicon):
        # z alongside ü and ll pins the display to Azümchefe
        g = gloss(best("mapuzuguyekvmejeaiñ", lexicon), lexicon, AZUMCHEFE)
        assert analysis_header(g) == "mapu-zugu-yekü-me-lle-a-iñ"

    def test_display_orthography_changes_surfaces(self, lexicon):
        seg = best("xekayawkelai", lexicon)
        assert analysis_header(gloss(seg, lexicon, RAGILEO)) == "xeka-yaw-ke-la-i"
        assert analysis_header(gloss(seg, lexicon, AZUMCHEFE)) == "txeka-yaw-ke-la-i"

    def test_context_free_is_declared(self, lexicon):
        assert gloss(best("ruka", lexicon), lexicon, RAGILEO).context_free


class TestCombinationRules:
    def test_afu_collapses(self, lexicon):
        g = gloss(best("xekayafun", lexicon), lexicon, RAGILEO)
        combined = [line for line in g.lines if len(line.morph_ids) > 1]
        assert [line.morph_ids for line in combined] == [("ya", "fu")]

    def test_longest_rule_wins(self, lexicon):
        # we;ke;la (3) outranks any 2-suffix rule over the same stretch
        g = gloss(best("xekawekelan", lexicon), lexicon, RAGILEO)
        assert ("we", "ke", "la") in [line.morph_ids for line in g.lines]

    def test_without_rule_lines_stay_separate(self, lexicon):
        bare = Lexicon(
            lexicon.roots, lexicon.suffixes, lexicon.glosses, (), lexicon.suffix_index
        )
        seg = best("xekayafun", lexicon)
        with_rule = gloss(seg, lexicon, RAGILEO)
        without = gloss(seg, bare, RAGILEO)
        assert len(without.lines) == len(with_rule.lines) + 1
        assert all(len(line.morph_ids) == 1 for line in without.lines)

    def test_rule_never_spans_the_root(self, lexicon):
        fake = Lexicon(
            lexicon.roots,
            lexicon.suffixes,
            lexicon.glosses,
            (CombinationRule("bad", ("xekan", "yaw"), "g_yaw"),) + lexicon.combinations,
            lexicon.suffix_index,
        )
        g = gloss(best("xekayawkelai", lexicon), fake, RAGILEO)
        assert g.lines[0].morph_ids == ("xekan",)


class TestFormatting:
    def test_text_block(self, lexicon):
        g = gloss(best("xekayawkelai", lexicon), lexicon, AZUMCHEFE)
        out = format_analysis(g, "text")
        lines = out.splitlines()
        assert lines[0] == "txeka-yaw-ke-la-i"
        assert lines[1].startswith("txeka(n)-") and "vi & vtr" in lines[1]
        assert len(lines) == 6

    def test_unknown_format_rejected(self, lexicon):
        g = gloss(best("ruka", lexicon), lexicon, RAGILEO)
        with pytest.raises(KawinError, match="unknown format"):
            format_analysis(g, "yaml")

    def test_no_analysis_block(self, lexicon):
        result = segment(ragileo("xeka"), lexicon)
        out = format_no_analysis(result, catalog("es"))
        assert catalog("es")["no_analysis"] in out
        assert "[no-ending]" in out

    def test_json_format_parses(self, lexicon):
        g = gloss(best("xekayawkelai", lexicon), lexicon, AZUMCHEFE)
        data = json.loads(format_analysis(g, "json"))
        assert data["header"] == "txeka-yaw-ke-la-i"
        assert len(data["lines"]) == 5


class TestJsonRoundTrip:
    @pytest.mark.parametrize(
        "word", ["xekayawkelai", "mapuzuguyekvmejeaiñ", "ruka", "xekayafun"]
    )
    def test_round_trip(self, lexicon, word):
        g = gloss(best(word, lexicon), lexicon, UNIFICADO)
        data = analysis_to_dict(g)
        back = analysis_from_dict(json.loads(json.dumps(data)), lexicon)
        assert analysis_to_dict(back) == data


class TestCoverage:
    def test_every_piece_is_glossed(self, lexicon):
        # every piece of every segmentation of a word battery lands in
        # exactly one gloss line
        for word in ["xekayawkelai", "mapuzuguyekvmejeaiñ", "pemurpayafuyu", "ruka"]:
            for seg in segment(ragileo(word), lexicon).segmentations:
                g = gloss(seg, lexicon, RAGILEO)
                covered = [m for line in g.lines for m in line.morph_ids]
                assert covered == [p.morph_id for p in seg.pieces]
