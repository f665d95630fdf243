import re
import time

import pytest

from hopfcyclic import builtin_hopf, involution_pairs, sayd_from_modular_pair, trivial_pair


@pytest.fixture(scope="session")
def c2():
    return builtin_hopf("c2")


@pytest.fixture(scope="session")
def h4():
    return builtin_hopf("h4")


@pytest.fixture(scope="session")
def h4_pairs(h4):
    pairs = involution_pairs(h4)
    assert len(pairs) == 2
    return pairs


@pytest.fixture(scope="session")
def c2_pairs(c2):
    return involution_pairs(c2)


@pytest.fixture(scope="session")
def c2_trivial(c2):
    return sayd_from_modular_pair(c2, trivial_pair(c2))


# one line per acceptance criterion at the end of the run

_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if m:
        k = int(m.group(1))
        ok, secs = _acceptance.get(k, (True, 0.0))
        _acceptance[k] = (ok and report.outcome == "passed", secs + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for k in sorted(_acceptance):
        ok, secs = _acceptance[k]
        terminalreporter.write_line("criterion %2d: %s  (%.1f s)" % (k, "PASS" if ok else "FAIL", secs))


@pytest.fixture
def stopwatch():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
