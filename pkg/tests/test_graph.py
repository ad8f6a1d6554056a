from __future__ import annotations

import pytest
from hypothesis import given

from src.elements import full_mask, mask_of
from src.errors import ElementOutOfRange
from src.graph import (
    Multigraph,
    UnionFind,
    bonds,
    complete_graph,
    cycle_graph,
    cycles,
    vertex_connectivity,
)
from tests.conftest import K4_STARS, K4_TRIANGLES, multigraphs
from tests.settings import STANDARD_SETTINGS


def test_union_find_merges_once():
    uf = UnionFind(4)
    assert uf.union(0, 1)
    assert uf.union(2, 3)
    assert not uf.union(1, 0)
    assert uf.union(1, 3)
    assert uf.find(0) == uf.find(2)


def test_complete_graph_edge_order():
    assert complete_graph(4).edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def test_rank_is_forest_size():
    g = complete_graph(4)
    assert g.rank(full_mask(6)) == 3
    assert g.rank(K4_TRIANGLES[0]) == 2
    assert g.rank(mask_of([0, 5])) == 2


def test_edge_outside_vertex_range_rejected():
    with pytest.raises(ElementOutOfRange):
        Multigraph(2, ((0, 2),))


def test_contract_merges_endpoints_and_renumbers():
    g, id_map = complete_graph(4).contract_edges(mask_of([0]))
    assert g.vertex_count == 3
    assert g.size == 5
    assert id_map == {1: 0, 2: 1, 3: 2, 4: 3, 5: 4}
    # 02 and 12 become parallel once 0 and 1 are identified.
    assert g.edges[0] == g.edges[2]


def test_delete_keeps_vertices():
    g, id_map = complete_graph(4).delete_edges(mask_of([5]))
    assert g.vertex_count == 4
    assert g.size == 5
    assert 5 not in id_map


def test_k4_cycles_and_bonds():
    g = complete_graph(4)
    found = cycles(g)
    assert set(K4_TRIANGLES) <= set(found)
    assert len(found) == 7
    cuts = bonds(g)
    assert set(K4_STARS) <= set(cuts)
    assert len(cuts) == 7


def test_parallel_edges_and_loops_are_cycles():
    g = Multigraph(2, ((0, 1), (0, 1), (1, 1)))
    assert cycles(g) == [0b011, 0b100]


def test_vertex_connectivity():
    assert vertex_connectivity(complete_graph(4)) == 3
    assert vertex_connectivity(cycle_graph(5)) == 2


@given(g=multigraphs())
@STANDARD_SETTINGS
def test_cycles_are_minimal_dependent(g):
    for c in cycles(g):
        n = c.bit_count()
        assert g.rank(c) == n - 1
        for e in range(g.size):
            if c >> e & 1:
                assert g.rank(c & ~(1 << e)) == n - 1
