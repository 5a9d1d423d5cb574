"""Regenerate the frontend's JSON fixtures from the live pipeline.

The frontend tests run against these frozen /api/analyze payloads so they
do not need a running service. Rerun after any lexicon change:

    python scripts/make_fixtures.py
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from kawin.lexicon import default_lexicon
from kawin.service import AnalyzeRequest, run_pipeline

WORDS = [
    "txekayawkelai",
    "mapuzuguyekümelleaiñ",
    "pemurpayafuyu",
    "ruka",
    "xxxx",
    "Pichikalu iñche , amukefun chillkatuwe ruka mew , fewla chillkatuwekelan.",
]

OUT = ROOT / "frontend" / "fixtures"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    lexicon = default_lexicon()
    for text in WORDS:
        payload = run_pipeline(AnalyzeRequest(text=text), lexicon)
        payload["timing"] = {"total_ms": 0}  # frozen fixtures carry no timing
        name = text.split()[0].lower().replace(".", "") + (
            "-phrase" if " " in text else ""
        )
        path = OUT / f"{name}.json"
        path.write_text(
            json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
        print(f"wrote {path.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
