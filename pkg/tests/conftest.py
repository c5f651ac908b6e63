import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from edgeideal import config
from edgeideal.graph import Graph

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@pytest.fixture
def cutoffs():
    """Temporarily change resource cutoffs inside a test."""
    saved = config.CUTOFFS

    def change(**kw):
        config.set_cutoffs(**kw)

    yield change
    config.CUTOFFS = saved


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
