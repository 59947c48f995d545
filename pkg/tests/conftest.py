import pytest
from hypothesis import settings, strategies as st

from tubings_dse.mellin import MellinTable
from tubings_dse.trees import Decoration, PlaneTree

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def plane_trees(draw, min_size=1, max_size=7, weights=(1,)):
    """Random plane tree grown by attaching vertex i below a random earlier vertex."""
    n = draw(st.integers(min_size, max_size))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    ws = [draw(st.sampled_from(weights)) for _ in range(n)]
    kids = {i: [] for i in range(n)}
    for child, parent in enumerate(parents, start=1):
        kids[parent].append(child)

    def build(v):
        return PlaneTree(Decoration(ws[v]), tuple(build(c) for c in kids[v]))

    return build(0)


@pytest.fixture(scope="session")
def sym5():
    return MellinTable.symbolic(6)


@pytest.fixture(scope="session")
def sym12():
    return MellinTable.symbolic(6, [Decoration(1), Decoration(2)])
