"""kawin: Mapuzugun orthography conversion, morphological segmentation and
learner-oriented glossing."""

__version__ = "0.1.0"

from .grapheme import (  # noqa: F401
    ALL_ORTHOGRAPHIES,
    Inventory,
    KawinError,
    LoadError,
    Orthography,
    PhonemeString,
    RenderError,
    TokenizationError,
    default_inventory,
    load_inventory,
    render,
    tokenize,
)
from .orthography import (  # noqa: F401
    ConversionResult,
    DetectionResult,
    convert,
    detect,
    detect_document,
)
from .lexicon import Lexicon, default_lexicon, load_lexicon, validate_lexicon  # noqa: F401
from .analyzer import Segmentation, segment, segment_phrase  # noqa: F401
from .glosser import GlossedAnalysis, format_analysis, gloss  # noqa: F401
