from __future__ import annotations

import pytest

from qcc.enumerate import catalog


@pytest.fixture(scope="session")
def small_catalog():
    """Every graph on at most 8 vertices, one per isomorphism class."""
    return [g for n in range(1, 9) for g in catalog(n)]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.format_line(criterion))
