from __future__ import annotations

import sys
from pathlib import Path

import pytest

from oqkit.catalog import boolean_algebra, cylindric_set_algebra, mo, o6, with_simple_quantifiers
from oqkit.transforms import qca_to_cqia

sys.path.insert(0, str(Path(__file__).parent))

REPO = Path(__file__).resolve().parents[1]
DATA = REPO / "data"

CATALOG_QCA_NAMES = ["cylset:2:2", "simple:boolean:2:2", "simple:mo:2:2"]


def catalog_qcas():
    """The three catalog QCAs every theorem is checked on."""
    return {
        "cylset:2:2": cylindric_set_algebra(2, 2),
        "simple:boolean:2:2": with_simple_quantifiers(boolean_algebra(2), 2),
        "simple:mo:2:2": with_simple_quantifiers(mo(2), 2),
    }


def extra_qcas():
    return {
        "cylset:1:2": cylindric_set_algebra(1, 2),
        "cylset:3:1": cylindric_set_algebra(3, 1),
        "cylset:2:3": cylindric_set_algebra(2, 3),
        "simple:boolean:3:3": with_simple_quantifiers(boolean_algebra(3), 3),
        "simple:mo:3:1": with_simple_quantifiers(mo(3), 1),
        "simple:boolean:0:2": with_simple_quantifiers(boolean_algebra(0), 2),
    }


@pytest.fixture(scope="session")
def qcas():
    return catalog_qcas()


@pytest.fixture(scope="session")
def cqias(qcas):
    return {name: qca_to_cqia(A) for name, A in qcas.items()}


@pytest.fixture
def b2():
    return boolean_algebra(2)


@pytest.fixture
def mo2():
    return mo(2)


@pytest.fixture
def hexagon():
    return o6()


ACCEPTANCE_PREFIX = "tests/test_acceptance.py::"


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if nodeid.startswith(ACCEPTANCE_PREFIX) and getattr(rep, "when", "call") == "call":
                lines.append((nodeid[len(ACCEPTANCE_PREFIX):], outcome))
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
