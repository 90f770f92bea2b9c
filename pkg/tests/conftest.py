import sys
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from tclinks import BraidWord  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def braid_words(draw, min_strands=2, max_strands=5, max_len=12):
    n = draw(st.integers(min_strands, max_strands))
    gens = st.integers(1, n - 1).flatmap(lambda g: st.sampled_from((g, -g)))
    letters = draw(st.lists(gens, max_size=max_len))
    return BraidWord(n, tuple(letters))


@st.composite
def word_pairs(draw, min_strands=2, max_strands=5, max_len=12):
    w = draw(braid_words(min_strands, max_strands, max_len))
    gens = st.integers(1, w.strands - 1).flatmap(lambda g: st.sampled_from((g, -g)))
    v = BraidWord(w.strands, tuple(draw(st.lists(gens, max_size=max_len))))
    return w, v


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
