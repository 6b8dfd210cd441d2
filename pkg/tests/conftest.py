import sys
from pathlib import Path

import pytest

from slpgram import validate

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"
FIG1_TEXT = b"aababaababaab"


@pytest.fixture
def fig1():
    # X1=a X2=b X3=X1X2 X4=X1X3 X5=X3X4 X6=X4X5 X7=X6X5 (0-based ids here)
    return validate([("T", 97), ("T", 98), ("N", 0, 1), ("N", 0, 2), ("N", 2, 3), ("N", 3, 4), ("N", 5, 4)])


@pytest.fixture(scope="session")
def corpora():
    return sorted(p for p in DATA.iterdir() if p.suffix != ".py")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
