import pytest

from helpers import S2, chain, cls


@pytest.fixture
def c_s2():
    """The running example: whole category, then {S2}, then zero, breaking at 1/3 and 2/3."""
    return chain(2, [7, cls(2, S2), 0], ["1/3", "2/3"])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        terminalreporter.write_line(results[k])
