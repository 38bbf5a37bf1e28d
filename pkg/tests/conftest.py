from pathlib import Path

import pytest

from phonofuse.pronlex import load_lexicon

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = FIXTURES / "corpus"


def real_cmudict_path():
    """Path of a full CMU dictionary if one is installed (the ``cmudict`` package)."""
    try:
        import cmudict
    except ImportError:
        return None
    with cmudict.dict_stream() as fh:
        return Path(fh.name)


@pytest.fixture(scope="session")
def mini_lexicon():
    return load_lexicon()[0]


@pytest.fixture(scope="session")
def real_dict_path():
    path = real_cmudict_path()
    if path is None:
        pytest.skip("full CMU dictionary not installed")
    return path


def read_tsv(name):
    rows = []
    for line in (FIXTURES / name).read_text().splitlines():
        if line and not line.startswith("#"):
            rows.append(tuple(line.split("\t")))
    return rows


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k[2:])):
        ok, title = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{key} {'PASS' if ok else 'FAIL'}  {title}")
