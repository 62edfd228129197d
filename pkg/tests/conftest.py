import pytest
from hypothesis import strategies as st

from catuskoti import _pykernel, kernel
from catuskoti.formula import And, Implies, Letter, Not, Or

BACKENDS = [_pykernel] + ([kernel.backend] if kernel.backend is not _pykernel else [])


@pytest.fixture(params=BACKENDS, ids=lambda b: b.__name__.rsplit(".", 1)[-1])
def backend(request, monkeypatch):
    """Run the test once per available kernel backend."""
    monkeypatch.setattr(kernel, "backend", request.param)
    return request.param


def formulas(names=("A", "B"), max_depth=3):
    leaf = st.sampled_from(names).map(Letter)
    if max_depth == 0:
        return leaf
    sub = formulas(names, max_depth - 1)
    return st.one_of(
        leaf,
        sub.map(Not),
        st.builds(And, sub, sub),
        st.builds(Or, sub, sub),
        st.builds(Implies, sub, sub),
    )


# one summary line per acceptance criterion

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    ok = report.passed and _criteria.get(number, (True,))[0]
    _criteria[number] = (ok, title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        ok, title = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}")
