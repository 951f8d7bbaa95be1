from pathlib import Path

import pytest

from acceptance_report import RESULTS
from treeswap.corpus import align_bitext, read_conllu

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def toy_paths() -> tuple[str, str]:
    return str(DATA_DIR / "toy.en.conllu"), str(DATA_DIR / "toy.de.conllu")


@pytest.fixture(scope="session")
def toy_corpus(toy_paths):
    src, tgt = toy_paths
    return align_bitext(read_conllu(src), read_conllu(tgt))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in RESULTS:
        terminalreporter.write_line(f"{verdict}: {name}")
