import pytest
from hypothesis import strategies as st

from pseudolines.arrangement import AffineArrangement, n_crossings, validate


@st.composite
def arrangements(draw, min_n=3, max_n=9):
    """Random sweep: at every step perform one of the crossings still allowed."""
    n = draw(st.integers(min_n, max_n))
    perm = list(range(n))
    word = []
    for _ in range(n_crossings(n)):
        choices = [p for p in range(1, n) if perm[p - 1] < perm[p]]
        p = draw(st.sampled_from(choices))
        perm[p - 1], perm[p] = perm[p], perm[p - 1]
        word.append(p)
    return AffineArrangement(validate(n, word))


@pytest.fixture
def seed_root(tmp_path):
    return tmp_path / "seeds"


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        status, title, detail = results[num]
        terminalreporter.write_line(f"[{status}] {num}. {title} -- {detail}")
