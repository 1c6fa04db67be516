from __future__ import annotations

import pytest
from esdelta.generators import complete, complete_bipartite, cycle, path, petersen, star
from esdelta.graph import Graph


def pytest_addoption(parser):
    parser.addoption("--deep", action="store_true", default=False, help="run the n = 7 sweep")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--deep"):
        return
    skip = pytest.mark.skip(reason="needs --deep")
    for item in items:
        if "deep" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def named():
    """Small named graphs used across modules."""
    return {
        "P3": path(3),
        "C5": cycle(5),
        "C6": cycle(6),
        "K4": complete(4),
        "K33": complete_bipartite(3, 3),
        "star3": star(3),
        "petersen": petersen(),
    }


# acceptance tests append (label, ok, detail); printed once at the end of the run
CRITERIA: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in sorted(CRITERIA, key=lambda c: (len(c[0]), c[0])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {label}: {detail}")
