from __future__ import annotations

import pytest

from src.catalog import (
    build_catalog,
    enumerate_3connected_graphs,
    fano,
    named_matroids,
    uniform_entries,
)
from src.connectivity import is_k_connected
from src.graph import vertex_connectivity
from src.matroid import check_rank_axioms, hyperplanes


@pytest.mark.parametrize("max_vertices,count", [(4, 1), (5, 4), (6, 21)])
def test_three_connected_graph_counts(max_vertices, count):
    graphs = enumerate_3connected_graphs(max_vertices)
    assert len(graphs) == count
    assert all(vertex_connectivity(g) >= 3 for g in graphs)


def test_graph_enumeration_range():
    with pytest.raises(ValueError):
        enumerate_3connected_graphs(3)
    with pytest.raises(ValueError):
        enumerate_3connected_graphs(8)


def test_fano_has_seven_lines():
    f7 = fano()
    assert f7.full_rank == 3
    assert len(hyperplanes(f7)) == 7
    assert check_rank_axioms(f7) == []


@pytest.mark.parametrize("entry", named_matroids(), ids=lambda e: e.name)
def test_named_entries_are_three_connected(entry):
    assert is_k_connected(entry.matroid, 3)


def test_uniform_entries_skip_trivial_ranks():
    names = [e.name for e in uniform_entries(4, 5)]
    assert names == ["U(2,4)", "U(2,5)", "U(3,5)"]


def test_small_catalog_keeps_first_name():
    cfg = {"catalog": {"max_vertices": 4, "uniform_min_elements": 4, "uniform_max_elements": 5, "family_ns": [3]}}
    entries = build_catalog(cfg)
    names = [e.name for e in entries]
    assert len(names) == len(set(names))
    assert names.count("U(2,4)") == 1
    assert "P*(3)" in names
    assert any(e.provenance.startswith("graphic") for e in entries)
