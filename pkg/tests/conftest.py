import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from bandpath.atlas import load_atlas  # noqa: E402
from bandpath.pathways import build_graph  # noqa: E402


@pytest.fixture(scope="session")
def atlas():
    return load_atlas()


@pytest.fixture(scope="session")
def graph(atlas):
    return build_graph(atlas)


@pytest.fixture(scope="session")
def bundle(atlas):
    return atlas.bundle


# negative Hopf link, both crossings -1 (orientations traced by hand)
HOPF_NEG = "PD[X[4,1,3,2], X[2,3,1,4]]"
# trefoil from the 2-braid sigma_1^3 closure: all crossings +1
TREFOIL_RH = "PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]"


# -- acceptance summary ------------------------------------------------------------

ACCEPTANCE = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}")
