from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .connectivity import triads, triangles
from .elements import ElementSet, full_mask, lowest, relabel, size
from .errors import InternalContradiction, NTooSmall
from .graph import Multigraph, complete_graph
from .isomorphism import is_isomorphic
from .matroid import Matroid, closure, cycle_matroid, dual, restrict

# Vertices 0..2 form the part of size three; vertices 3..n+2 the part of size n.
SMALL_PART = (0, 1, 2)
TRIANGLE = ((0, 1), (1, 2), (0, 2))
# K~3,2 is K5 minus an edge; its bond matroid has the hyperplane property but lies below the family.
BOUNDARY_N = 2


@dataclass(frozen=True)
class FamilyWitness:
    n: int
    element_bijection: Dict[int, int]
    hyperplane: ElementSet


def build_ktilde_graph(n: int) -> Multigraph:
    """K_{3,n} plus a triangle on the part of size three.

    Edge i*n + j joins small-part vertex i to large-part vertex 3 + j; the
    last three edges are the triangle.
    """
    if n < 2:
        raise NTooSmall(f"K~3,n needs n >= 2, got {n}")
    edges = [(i, 3 + j) for i in SMALL_PART for j in range(n)]
    edges.extend(TRIANGLE)
    return Multigraph(3 + n, tuple(edges))


@lru_cache(maxsize=None)
def family_member(n: int) -> Matroid:
    if n < 3:
        raise NTooSmall(f"family members start at n = 3, got {n}")
    return dual(cycle_matroid(build_ktilde_graph(n)))


def family_hyperplane(n: int) -> ElementSet:
    return full_mask(3 * n)


def ktilde_blocks(n: int) -> Tuple[ElementSet, List[ElementSet]]:
    """The triangle and the vertex-star triads T_j of the large part."""
    triangle = full_mask(3 * n + 3) & ~full_mask(3 * n)
    blocks = [sum(1 << (i * n + j) for i in range(3)) for j in range(n)]
    return triangle, blocks


def is_in_P_star(M: Matroid, *, seed: int = 0) -> Optional[FamilyWitness]:
    m = M.size
    if m < 12 or (m - 3) % 3:
        return None
    n = (m - 3) // 3
    if M.full_rank != 2 * n + 1:
        return None
    return _witness(M, n, family_member(n), seed=seed)


@lru_cache(maxsize=None)
def boundary_member() -> Matroid:
    """M*(K~3,2), the prism cycle matroid up to isomorphism."""
    return dual(cycle_matroid(build_ktilde_graph(BOUNDARY_N)))


def is_boundary_member(M: Matroid, *, seed: int = 0) -> Optional[FamilyWitness]:
    if M.size != 3 * BOUNDARY_N + 3 or M.full_rank != 2 * BOUNDARY_N + 1:
        return None
    return _witness(M, BOUNDARY_N, boundary_member(), seed=seed)


def _witness(M: Matroid, n: int, canonical: Matroid, *, seed: int) -> Optional[FamilyWitness]:
    mapping = is_isomorphic(M, canonical, seed=seed)
    if mapping is None:
        return None
    inverse = {f: e for e, f in mapping.items()}
    hyperplane = relabel(family_hyperplane(n), inverse)
    if size(hyperplane) != 3 * n or M.rank(hyperplane) != M.full_rank - 1 or closure(M, hyperplane) != hyperplane:
        raise InternalContradiction("isomorphic image of the K3,n edges is not a hyperplane")
    logging.debug("family witness n=%d", n)
    return FamilyWitness(n=n, element_bijection=mapping, hyperplane=hyperplane)


def _k4() -> Matroid:
    return cycle_matroid(complete_graph(4))


def p_description_check(M: Matroid) -> bool:
    """Whether E(M) splits into a triangle C and at least three triads T_i with M|(C u T_i) = M(K4)."""
    m = M.size
    if m < 12 or m % 3:
        return False
    k4 = _k4()
    tds = triads(M)
    for tri in triangles(M):
        rest = M.ground & ~tri
        blocks = []
        for t in tds:
            if t & tri:
                continue
            piece, _ = restrict(M, tri | t)
            if is_isomorphic(piece, k4) is not None:
                blocks.append(t)
        if _exact_cover(rest, blocks):
            return True
    return False


def _exact_cover(rest: ElementSet, blocks: List[ElementSet]) -> bool:
    if not rest:
        return True
    pivot = lowest(rest)
    for b in blocks:
        if b >> pivot & 1 and b & ~rest == 0:
            if _exact_cover(rest & ~b, blocks):
                return True
    return False
