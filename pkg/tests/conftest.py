import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from fntopo import FiniteFunction  # noqa: E402

DATA = Path(__file__).parent / "data"
FIG1_TEXT = "0 2\n1 2\n2 3\n3 4\n4 5\n5 3\n"


@pytest.fixture
def fig1():
    return FiniteFunction({0: 2, 1: 2, 2: 3, 3: 4, 4: 5, 5: 3})


@pytest.fixture
def fig1_path(tmp_path):
    p = tmp_path / "fig1.txt"
    p.write_text(FIG1_TEXT)
    return p


@st.composite
def tables(draw, max_size=12):
    n = draw(st.integers(1, max_size))
    images = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    return FiniteFunction.from_list(images)
