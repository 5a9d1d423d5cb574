import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kawin.grapheme import default_inventory
from kawin.lexicon import default_lexicon, default_lexicon_dir


@pytest.fixture(scope="session")
def inventory():
    return default_inventory()


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def data_dir():
    return default_lexicon_dir()
