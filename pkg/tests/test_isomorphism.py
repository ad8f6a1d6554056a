from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.catalog import fano, whirl3
from src.errors import TargetTooLarge
from src.families import build_ktilde_graph
from src.graph import Multigraph, complete_graph
from src.isomorphism import fingerprint, has_minor, is_isomorphic
from src.matroid import cycle_matroid, dual, uniform
from tests.settings import QUICK_SETTINGS


def test_k4_is_not_the_whirl(k4):
    assert fingerprint(k4) != fingerprint(whirl3())
    assert is_isomorphic(k4, whirl3()) is None


def test_k4_is_self_dual(k4):
    mapping = is_isomorphic(k4, dual(k4))
    assert mapping is not None
    assert sorted(mapping.values()) == list(range(6))


@given(perm=st.permutations(list(range(6))))
@QUICK_SETTINGS
def test_relabeled_k4_is_isomorphic(perm):
    g = complete_graph(4)
    M = cycle_matroid(g)
    shuffled = cycle_matroid(Multigraph(4, tuple(g.edges[p] for p in perm)))
    mapping = is_isomorphic(shuffled, M)
    assert mapping is not None
    for a in range(1 << 6):
        image = sum(1 << mapping[e] for e in range(6) if a >> e & 1)
        assert shuffled.rank(a) == M.rank(image)


def test_uniform_matroids_differ_by_rank():
    assert is_isomorphic(uniform(2, 5), uniform(3, 5)) is None
    assert is_isomorphic(uniform(2, 5), dual(uniform(3, 5))) is not None


def test_minors(k4, u24):
    assert has_minor(cycle_matroid(complete_graph(5)), k4)
    assert has_minor(whirl3(), u24)
    assert not has_minor(k4, u24)
    assert has_minor(fano(), k4)


def test_minor_target_must_be_small(k4, u24):
    with pytest.raises(TargetTooLarge):
        has_minor(u24, k4)


def test_graphic_matroids_have_no_u24_minor():
    assert not has_minor(cycle_matroid(complete_graph(5)), uniform(2, 4))


@pytest.mark.slow
def test_ktilde_cycle_matroid_has_no_u24_minor():
    assert not has_minor(cycle_matroid(build_ktilde_graph(3)), uniform(2, 4))
