from __future__ import annotations

import pytest
from hypothesis import given

from src.elements import bit, full_mask, mask_of
from src.errors import DeleteAll, EmptyBases, NoEdges, NotAMatroid, RankZero, UnequalCardinality
from src.graph import Multigraph
from src.matroid import (
    Matroid,
    bases,
    check_rank_axioms,
    circuits,
    closed_hyperplanes,
    closure,
    cocircuits,
    coclosure,
    contract,
    cosimplify,
    cycle_matroid,
    delete,
    dual,
    from_bases,
    hyperplanes,
    is_circuit,
    is_independent,
    loops,
    minor,
    parallel_classes,
    rank_view_minor,
    series_classes,
    simplify,
    uniform,
)
from tests.conftest import K4_STARS, K4_TRIANGLES, multigraphs
from tests.settings import QUICK_SETTINGS, STANDARD_SETTINGS


def test_uniform_rank():
    U = uniform(2, 4)
    assert U.full_rank == 2
    assert U.rank(0b1) == 1
    assert U.rank(0b111) == 2
    assert len(bases(U)) == 6


def test_from_bases_rejects_bad_families():
    with pytest.raises(EmptyBases):
        from_bases(3, [])
    with pytest.raises(UnequalCardinality):
        from_bases(3, [0b011, 0b100])
    # {01, 23} alone fails exchange.
    with pytest.raises(NotAMatroid):
        from_bases(4, [0b0011, 0b1100])


def test_cycle_matroid_needs_edges():
    with pytest.raises(NoEdges):
        cycle_matroid(Multigraph(3, ()))


def test_k4_structure(k4):
    assert k4.full_rank == 3
    assert len(bases(k4)) == 16
    assert sorted(c for c in circuits(k4) if c.bit_count() == 3) == sorted(K4_TRIANGLES)
    assert len(circuits(k4)) == 7
    assert set(K4_STARS) <= set(cocircuits(k4))
    assert len(hyperplanes(k4)) == 7
    assert hyperplanes(k4) == closed_hyperplanes(k4)


def test_closure_and_coclosure(k4):
    assert closure(k4, mask_of([0, 1])) == K4_TRIANGLES[0]
    assert closure(k4, mask_of([0, 5])) == mask_of([0, 5])
    # 0 and 1 are two edges at vertex 0, so the third star edge is in their coclosure.
    assert coclosure(k4, mask_of([0, 1])) == K4_STARS[0]


def test_dual_is_memoized_both_ways(k4):
    D = dual(k4)
    assert D.full_rank == 3
    assert dual(D) is k4
    B = dual(uniform(2, 5))
    assert B.full_rank == 3
    assert dual(B).full_rank == 2


def test_minors_of_k4(k4):
    N, id_map = contract(k4, bit(0))
    assert N.size == 5 and N.full_rank == 2
    assert id_map[1] == 0
    # Contracting one edge of K4 leaves two parallel pairs.
    assert sorted(c.bit_count() for c in parallel_classes(N)) == [1, 2, 2]
    S, _ = simplify(N)
    assert S.size == 3 and S.full_rank == 2
    D, _ = delete(k4, bit(0))
    assert D.full_rank == 3
    assert sorted(c.bit_count() for c in series_classes(D)) == [1, 2, 2]
    C, _ = cosimplify(D)
    assert C.size == 3


def test_graph_minor_matches_rank_formula(k4):
    fast, _ = minor(k4, bit(0), bit(5))
    slow, _ = rank_view_minor(k4, bit(0), bit(5))
    assert fast.kind == "graph"
    assert slow.kind == "minor"
    assert all(fast.rank(a) == slow.rank(a) for a in range(1 << 4))


def test_delete_everything_rejected(k4):
    with pytest.raises(DeleteAll):
        delete(k4, full_mask(6))
    with pytest.raises(ValueError):
        minor(k4, bit(0), bit(0))


def test_simplify_needs_positive_rank():
    loops_only = cycle_matroid(Multigraph(1, ((0, 0), (0, 0))))
    assert loops(loops_only) == 0b11
    with pytest.raises(RankZero):
        simplify(loops_only)


def test_circuit_predicate(k4):
    assert is_circuit(k4, K4_TRIANGLES[0])
    assert not is_circuit(k4, K4_STARS[0])
    assert not is_circuit(k4, 0)
    assert is_independent(k4, K4_STARS[0])


def test_check_rank_axioms_passes_on_named_matroids(k4):
    assert check_rank_axioms(k4) == []
    assert check_rank_axioms(uniform(3, 6)) == []


def test_check_rank_axioms_reports_violations():
    class Broken:
        kind = "broken"

        def rank(self, mask: int) -> int:
            return mask.bit_count() % 2

    assert check_rank_axioms(Matroid(3, Broken()))


@given(g=multigraphs())
@STANDARD_SETTINGS
def test_graph_rank_agrees_with_listed_bases(g):
    M = cycle_matroid(g)
    listed = from_bases(M.size, bases(M))
    assert all(listed.rank(a) == M.rank(a) for a in range(1 << M.size))


@given(g=multigraphs())
@STANDARD_SETTINGS
def test_dual_rank_formula(g):
    M = cycle_matroid(g)
    D = dual(M)
    assert D.full_rank == M.size - M.full_rank
    for a in range(1 << M.size):
        assert D.rank(a) == a.bit_count() + M.rank(M.ground ^ a) - M.full_rank


@given(g=multigraphs(max_edges=7))
@QUICK_SETTINGS
def test_hyperplanes_complement_cocircuits(g):
    M = cycle_matroid(g)
    if M.full_rank == 0:
        return
    assert sorted(M.ground ^ h for h in hyperplanes(M)) == sorted(cocircuits(M))
    assert hyperplanes(M) == closed_hyperplanes(M)
