import random

import pytest
from hypothesis import strategies as st

from fareytree.eicf import EicfSeq
from fareytree.exact import make_rational

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def record():
    """Collect one pass/fail line per acceptance criterion."""

    def _record(name: str, ok: bool, detail: str = ""):
        ACCEPTANCE_RESULTS.append((name, ok, detail))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def even_nonzero(max_abs=10):
    return st.integers(1, max_abs // 2).flatmap(lambda k: st.sampled_from([2 * k, -2 * k]))


@st.composite
def finite_seqs(draw, min_size=0, max_size=12, max_abs=10):
    rest = draw(st.lists(even_nonzero(max_abs), min_size=max(min_size - 1, 0), max_size=max_size))
    if not rest and min_size == 0 and draw(st.booleans()):
        return EicfSeq(())
    first = draw(st.integers(-max_abs // 2, max_abs // 2)) * 2
    return EicfSeq((first, *rest))


@st.composite
def rationals(draw, max_abs=300):
    d = draw(st.integers(1, max_abs))
    n = draw(st.integers(-max_abs, max_abs))
    return make_rational(n, d)
