"""Per-criterion pass/fail summary for the acceptance suite."""

from collections import OrderedDict

import pytest

_results: "OrderedDict[tuple, list[str]]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(number, label): acceptance criterion checked by this test"
    )


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            key = (mark.args[0], mark.kwargs.get("label", ""))
            _results.setdefault(key, [])
            item.user_properties.append(("criterion", key))


def pytest_runtest_logreport(report):
    key = dict(report.user_properties).get("criterion")
    if key is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _results[key].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, label), outcomes in sorted(_results.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        if not outcomes:
            status = "NOT RUN"
        elif all(o == "passed" for o in outcomes):
            status = "PASS"
        else:
            status = "FAIL"
        suffix = f" ({label})" if label else ""
        terminalreporter.write_line(f"criterion {number}{suffix}: {status}")


@pytest.fixture
def budget():
    """Assert that a block finishes within a wall-clock budget in seconds."""
    import time
    from contextlib import contextmanager

    @contextmanager
    def check(seconds):
        start = time.perf_counter()
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"

    return check
