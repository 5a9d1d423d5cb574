"""Run the whole pipeline over a sample phrase and print the text report.

Usage: python scripts/demo.py [text ...]
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from kawin.cli import main

DEFAULT = "Pichikalu iñche , amukefun chillkatuwe ruka mew , fewla chillkatuwekelan."

if __name__ == "__main__":
    text = " ".join(sys.argv[1:]) or DEFAULT
    sys.exit(main(["analyze", text]))
