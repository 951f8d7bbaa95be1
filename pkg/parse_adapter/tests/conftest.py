import sys
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"

RULE_EN = f"{sys.executable} -m treeswap_parse.rule_runner --lang en"
RULE_DE = f"{sys.executable} -m treeswap_parse.rule_runner --lang de"


@pytest.fixture(scope="session")
def sample_paths():
    return str(DATA_DIR / "sample.en.txt"), str(DATA_DIR / "sample.de.txt")


@pytest.fixture
def rule_commands():
    return tuple(RULE_EN.split()), tuple(RULE_DE.split())
