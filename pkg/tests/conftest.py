import pytest
from hypothesis import strategies as st

from vistab.partitions import Partition


@st.composite
def partitions(draw, max_size=8):
    n = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    left = n
    while left:
        p = draw(st.integers(min_value=1, max_value=min(left, parts[-1] if parts else left)))
        parts.append(p)
        left -= p
    return Partition(parts)


@pytest.fixture
def small_qs():
    return (2, 3)
