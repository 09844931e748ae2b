from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from ncdist.series import TruncatedSeries, words_up_to

settings.register_profile("default", max_examples=30, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


@st.composite
def series(draw, k=None, degree=None, sparse=True):
    k = draw(st.integers(1, 2)) if k is None else k
    degree = draw(st.integers(1, 4)) if degree is None else degree
    coeffs = {}
    for w in words_up_to(k, degree):
        if not sparse or draw(st.booleans()):
            coeffs[w] = draw(rationals)
    return TruncatedSeries(k, degree, coeffs)


_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    failed = report.failed
    if report.when == "call" or failed:
        previous = _criteria.get(number, (title, "PASS"))[1]
        _criteria[number] = (title, "FAIL" if failed or previous == "FAIL" else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title}")
