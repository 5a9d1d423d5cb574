"""Runtime configuration: one JSON file, overridable by CLI flags.

The only environment variable honored is KAWIN_DATA (lexicon/phoneme data
directory); everything else is explicit.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional

from .grapheme import KawinError, Orthography
from .lexicon import default_lexicon_dir


@dataclass(frozen=True)
class ServiceConfig:
    port: int = 8140
    data_dir: Optional[str] = None
    static_dir: Optional[str] = None
    max_input_chars: int = 2000
    max_segmentations: int = 50
    segmentation_cap: int = 100  # hard server-side ceiling for requests
    default_display: Optional[Orthography] = None
    message_language: str = "es"

    def resolved_data_dir(self) -> Path:
        if self.data_dir:
            return Path(self.data_dir)
        env = os.environ.get("KAWIN_DATA")
        if env:
            return Path(env)
        return default_lexicon_dir()


_KEYS = {
    "port": int,
    "data_dir": str,
    "static_dir": str,
    "max_input_chars": int,
    "max_segmentations": int,
    "segmentation_cap": int,
    "default_display": Orthography.parse,
    "message_language": str,
}


def load_config(path: Optional[str] = None, **overrides) -> ServiceConfig:
    values = {}
    if path:
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise KawinError(f"cannot read config file {path}: {exc}") from exc
        for key, value in raw.items():
            if key not in _KEYS:
                raise KawinError(f"unknown config key {key!r} in {path}")
            values[key] = _KEYS[key](value)
    for key, value in overrides.items():
        if value is not None:
            values[key] = _KEYS[key](value) if key == "default_display" else value
    return ServiceConfig(**values)
