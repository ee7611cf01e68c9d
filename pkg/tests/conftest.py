from fractions import Fraction

import hypothesis
import hypothesis.strategies as st
import pytest

from subres.algebra import Poly

hypothesis.settings.register_profile("default", deadline=None, max_examples=60)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 6))


def root_lists(min_size=0, max_size=5):
    return st.lists(rationals, min_size=min_size, max_size=max_size, unique=True)


def polys(max_degree=4):
    return st.lists(rationals, max_size=max_degree + 1).map(Poly)


def nonmonic(degree):
    """Polynomials of exactly ``degree`` with arbitrary nonzero leading coefficient."""
    lead = rationals.filter(bool)
    return st.tuples(st.lists(rationals, min_size=degree, max_size=degree), lead).map(
        lambda t: Poly(t[0] + [t[1]])
    )


# -- acceptance summary -----------------------------------------------------------

_criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    number, title = mark.args
    _criteria.append((number, title, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    merged = {}
    for number, title, outcome in _criteria:
        prev = merged.get(number, (title, True))
        merged[number] = (prev[0], prev[1] and outcome == "passed")
    for number in sorted(merged):
        title, ok = merged[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")
