import random

import pytest

from singcurve import Field, IdealPresentation
from singcurve.cli import load_fixture

P = 10007


@pytest.fixture
def GF():
    return Field.prime(P)


@pytest.fixture
def QQ():
    return Field.rational()


@pytest.fixture
def rng():
    return random.Random(20261018)


def fixture_ideal(name, field=None):
    doc = load_fixture(name)
    if field is not None:
        doc.field = field
    return doc.ideal()


@pytest.fixture(scope="session")
def nodal():
    return fixture_ideal("nodal_cubic")


@pytest.fixture(scope="session")
def cusp():
    return fixture_ideal("cuspidal_cubic")


@pytest.fixture(scope="session")
def conic():
    return fixture_ideal("smooth_conic")


@pytest.fixture(scope="session")
def quartic():
    return fixture_ideal("smooth_quartic")


@pytest.fixture(scope="session")
def twisted():
    return fixture_ideal("twisted_cubic")


@pytest.fixture(scope="session")
def axes():
    return fixture_ideal("coordinate_axes")


@pytest.fixture(scope="session")
def line():
    return fixture_ideal("line")


def ideal(gens, names, field=None):
    return IdealPresentation.from_strings(gens, names, field or Field.prime(P))


_acceptance_outcomes: dict[str, bool] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        if report.when == "call" or report.failed:
            _acceptance_outcomes[name] = _acceptance_outcomes.get(name, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for label, tests in CRITERIA:
        results = [_acceptance_outcomes.get(fn.__name__) for fn in tests]
        if all(r is None for r in results):
            continue
        verdict = "PASS" if all(r is True for r in results) else "FAIL"
        terminalreporter.write_line(f"{verdict}  criterion {label}")
