import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rackcount import fixtures  # noqa: E402
from rackcount.cohomology import cochain_from_support  # noqa: E402

TREFOIL = "O1+,U2+,O3+,U1+,O2+,U3+"
TREFOIL_W4 = "O4+,U4+,O1+,U2+,O3+,U1+,O2+,U3+"
HOPF = "O1+,U2+ | U1+,O2+"
UNLINK2 = "0 | 0"
T42 = "O1+,U2+,O3+,U4+ | U1+,O2+,U3+,O4+"
KINKED = "O1+,U1+"
UNKNOT = "0"

M_T_PHI_SUPPORT = [(1, 2), (1, 4), (3, 2), (3, 4)]


@pytest.fixture(scope="session")
def t_ex6():
    return fixtures.rack("t_ex6")


@pytest.fixture(scope="session")
def m_t():
    return fixtures.rack("m_t")


@pytest.fixture(scope="session")
def m12():
    return fixtures.rack("m12")


@pytest.fixture(scope="session")
def phi13():
    return cochain_from_support(4, 13, M_T_PHI_SUPPORT)


# -- acceptance report: one PASS/FAIL line per criterion --------------------------

_CRITERIA: dict[int, list[bool]] = {}
_TITLES: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    _TITLES[number] = title
    if report.when == "call" or report.failed:
        _CRITERIA.setdefault(number, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        results = _CRITERIA[number]
        verdict = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"criterion {number}: {verdict}  {_TITLES[number]} ({sum(results)}/{len(results)} checks)"
        )
