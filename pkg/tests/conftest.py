from __future__ import annotations

from pathlib import Path
from typing import Callable

import pytest
from hypothesis import strategies as st

from src.families import family_member
from src.graph import Multigraph, complete_graph
from src.matroid import Matroid, cycle_matroid, uniform

# M(K4) edge ids: 01->0, 02->1, 03->2, 12->3, 13->4, 23->5.
K4_TRIANGLES = (0b001011, 0b010101, 0b100110, 0b111000)
K4_STARS = (0b000111, 0b011001, 0b101010, 0b110100)


@pytest.fixture
def k4() -> Matroid:
    return cycle_matroid(complete_graph(4))


@pytest.fixture
def u24() -> Matroid:
    return uniform(2, 4)


@pytest.fixture
def family3() -> Matroid:
    return family_member(3)


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], Path]:
    def write(name: str, text: str) -> Path:
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return p

    return write


@st.composite
def multigraphs(draw, max_vertices: int = 5, max_edges: int = 8) -> Multigraph:
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    vertex = st.integers(min_value=0, max_value=n - 1)
    edges = draw(st.lists(st.tuples(vertex, vertex), min_size=1, max_size=max_edges))
    return Multigraph(n, tuple(edges))
