"""Matroids on ground sets {0..m-1} with bitmask element sets.

Two rank backends exist: an explicit bases family and a multigraph with a
dual flag. Duals and minors of bases-backed matroids are views over the
original rank oracle; duals and minors of graph-backed matroids stay graph
backed, which keeps the large cographic family cheap to query.
"""

from __future__ import annotations

import logging
import random
from itertools import combinations
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .elements import (
    MAX_ELEMENTS,
    ElementSet,
    bit,
    check_mask,
    full_mask,
    iter_ids,
    mask_of,
    relabel,
    size,
)
from .errors import DeleteAll, ElementOutOfRange, EmptyBases, NoEdges, NotAMatroid, RankZero, UnequalCardinality
from .graph import Multigraph, bonds, cycles

# Ground sets up to this size get a full rank table when a sweep asks for one.
RANK_TABLE_LIMIT = 16

EXCHANGE_EXHAUSTIVE_MAX = 8
EXCHANGE_SAMPLES = 10_000

IdMap = Dict[int, int]


class BasesRank:
    kind = "bases"

    def __init__(self, bases: Tuple[ElementSet, ...]) -> None:
        self.bases = bases

    def rank(self, mask: ElementSet) -> int:
        return max((mask & b).bit_count() for b in self.bases)


class GraphRank:
    kind = "graph"

    def __init__(self, graph: Multigraph, dual: bool) -> None:
        self.graph = graph
        self.dual = dual
        self._edges = full_mask(graph.size)
        self._graph_rank = graph.rank(self._edges)

    def rank(self, mask: ElementSet) -> int:
        if not self.dual:
            return self.graph.rank(mask)
        return mask.bit_count() + self.graph.rank(self._edges ^ mask) - self._graph_rank


class DualRank:
    kind = "dual"

    def __init__(self, inner: "Matroid") -> None:
        self.inner = inner

    def rank(self, mask: ElementSet) -> int:
        inner = self.inner
        return mask.bit_count() + inner.rank(inner.ground ^ mask) - inner.full_rank


class MinorRank:
    """rank(S) = r_parent(lift(S) | contracted) - r_parent(contracted)."""

    kind = "minor"

    def __init__(self, parent: "Matroid", contracted: ElementSet, lift: Tuple[int, ...]) -> None:
        self.parent = parent
        self.contracted = contracted
        self.lift = lift
        self._base = parent.rank(contracted)

    def rank(self, mask: ElementSet) -> int:
        lifted = self.contracted
        lift = self.lift
        for e in iter_ids(mask):
            lifted |= 1 << lift[e]
        return self.parent.rank(lifted) - self._base


class Matroid:
    """Immutable matroid value; rank results are cached as they are computed."""

    __slots__ = ("size", "ground", "full_rank", "backend", "_cache", "_table", "_memo")

    def __init__(self, size: int, backend: Any) -> None:
        if not 1 <= size <= MAX_ELEMENTS:
            raise ElementOutOfRange(f"ground set size {size} outside 1..{MAX_ELEMENTS}")
        self.size = size
        self.ground = full_mask(size)
        self.backend = backend
        self._cache: Dict[ElementSet, int] = {}
        self._table: Optional[List[int]] = None
        self._memo: Dict[Any, Any] = {}
        self.full_rank = backend.rank(self.ground)

    @property
    def kind(self) -> str:
        return self.backend.kind

    @property
    def corank(self) -> int:
        return self.size - self.full_rank

    def rank(self, mask: ElementSet) -> int:
        table = self._table
        if table is not None:
            return table[mask]
        r = self._cache.get(mask)
        if r is None:
            r = self.backend.rank(mask)
            self._cache[mask] = r
        return r

    def rank_table(self) -> Optional[List[int]]:
        """Rank of every subset indexed by mask, or None above RANK_TABLE_LIMIT."""
        if self._table is None and self.size <= RANK_TABLE_LIMIT:
            rank = self.rank
            self._table = [rank(mask) for mask in range(1 << self.size)]
            self._cache.clear()
        return self._table

    def memo(self, key: Any, compute: Callable[[], Any]) -> Any:
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    def release(self) -> None:
        """Drop memoized structure and cached ranks, here and on the memoized dual."""
        partner = self._memo.get("dual")
        self._memo.clear()
        self._cache.clear()
        self._table = None
        if partner is not None and partner._memo:
            partner.release()

    def __repr__(self) -> str:
        return f"Matroid(size={self.size}, rank={self.full_rank}, kind={self.kind})"


def from_bases(m: int, bases: Iterable[ElementSet], *, seed: int = 0) -> Matroid:
    if not 1 <= m <= MAX_ELEMENTS:
        raise ElementOutOfRange(f"ground set size {m} outside 1..{MAX_ELEMENTS}")
    family = sorted(set(bases))
    if not family:
        raise EmptyBases("bases family is empty")
    for b in family:
        check_mask(b, m)
    r = size(family[0])
    if any(size(b) != r for b in family):
        raise UnequalCardinality("bases do not all have the same size")
    _check_exchange(family, m, seed=seed)
    return Matroid(m, BasesRank(tuple(family)))


def _check_exchange(family: Sequence[ElementSet], m: int, *, seed: int) -> None:
    known = set(family)

    def exchange_holds(b1: ElementSet, b2: ElementSet, e: int) -> bool:
        base = b1 & ~bit(e)
        return any(base | bit(f) in known for f in iter_ids(b2 & ~b1))

    if m <= EXCHANGE_EXHAUSTIVE_MAX:
        for b1 in family:
            for b2 in family:
                for e in iter_ids(b1 & ~b2):
                    if not exchange_holds(b1, b2, e):
                        raise NotAMatroid(f"basis exchange fails for element {e}")
        return
    rng = random.Random(seed)
    for _ in range(EXCHANGE_SAMPLES):
        b1 = rng.choice(family)
        b2 = rng.choice(family)
        diff = list(iter_ids(b1 & ~b2))
        if diff and not exchange_holds(b1, b2, rng.choice(diff)):
            raise NotAMatroid("basis exchange fails on a sampled pair")


def cycle_matroid(g: Multigraph) -> Matroid:
    if g.size == 0:
        raise NoEdges("graph has no edges")
    return Matroid(g.size, GraphRank(g, dual=False))


def bond_matroid(g: Multigraph) -> Matroid:
    return dual(cycle_matroid(g))


def uniform(r: int, m: int) -> Matroid:
    return from_bases(m, (mask_of(c) for c in combinations(range(m), r)))


def dual(M: Matroid) -> Matroid:
    def compute() -> Matroid:
        backend = M.backend
        if isinstance(backend, DualRank):
            return backend.inner
        if isinstance(backend, GraphRank):
            D = Matroid(M.size, GraphRank(backend.graph, dual=not backend.dual))
        else:
            D = Matroid(M.size, DualRank(M))
        D.memo("dual", lambda: M)
        return D

    return M.memo("dual", compute)


def rank(M: Matroid, A: ElementSet) -> int:
    return M.rank(check_mask(A, M.size))


def closure(M: Matroid, A: ElementSet) -> ElementSet:
    check_mask(A, M.size)
    r = M.rank(A)
    out = A
    for e in iter_ids(M.ground & ~A):
        if M.rank(A | bit(e)) == r:
            out |= bit(e)
    return out


def coclosure(M: Matroid, A: ElementSet) -> ElementSet:
    return closure(dual(M), A)


def is_closed(M: Matroid, A: ElementSet) -> bool:
    return closure(M, A) == A


def is_independent(M: Matroid, A: ElementSet) -> bool:
    return M.rank(A) == size(A)


def is_circuit(M: Matroid, C: ElementSet) -> bool:
    k = size(C)
    if k == 0 or M.rank(C) != k - 1:
        return False
    return all(M.rank(C & ~bit(e)) == k - 1 for e in iter_ids(C))


def _minor_ids(M: Matroid, A: ElementSet) -> Tuple[List[int], IdMap]:
    check_mask(A, M.size)
    if A == M.ground:
        raise DeleteAll("cannot remove every element")
    kept = [e for e in range(M.size) if not A >> e & 1]
    return kept, {old: new for new, old in enumerate(kept)}


def _minor(M: Matroid, deleted: ElementSet, contracted: ElementSet) -> Tuple[Matroid, IdMap]:
    removed = deleted | contracted
    kept, id_map = _minor_ids(M, removed)
    if removed == 0:
        return M, id_map
    backend = M.backend
    if isinstance(backend, GraphRank):
        g = backend.graph
        # In the bond matroid, deletion contracts graph edges and contraction deletes them.
        to_delete, to_contract = (contracted, deleted) if backend.dual else (deleted, contracted)
        g, first = g.contract_edges(to_contract)
        g, _ = g.delete_edges(relabel(to_delete, first))
        return Matroid(len(kept), GraphRank(g, dual=backend.dual)), id_map
    if isinstance(backend, MinorRank):
        parent = backend.parent
        lift = tuple(backend.lift[e] for e in kept)
        lifted_contracted = backend.contracted
        for e in iter_ids(contracted):
            lifted_contracted |= bit(backend.lift[e])
        return Matroid(len(kept), MinorRank(parent, lifted_contracted, lift)), id_map
    return Matroid(len(kept), MinorRank(M, contracted, tuple(kept))), id_map


def delete(M: Matroid, A: ElementSet) -> Tuple[Matroid, IdMap]:
    return _minor(M, A, 0)


def contract(M: Matroid, A: ElementSet) -> Tuple[Matroid, IdMap]:
    return _minor(M, 0, A)


def restrict(M: Matroid, A: ElementSet) -> Tuple[Matroid, IdMap]:
    return delete(M, M.ground & ~A)


def minor(M: Matroid, contracted: ElementSet, deleted: ElementSet) -> Tuple[Matroid, IdMap]:
    if contracted & deleted:
        raise ValueError("contracted and deleted sets overlap")
    return _minor(M, deleted, contracted)


def rank_view_minor(M: Matroid, contracted: ElementSet, deleted: ElementSet) -> Tuple[Matroid, IdMap]:
    """Minor through the rank formula only, bypassing any graph shortcut."""
    kept, id_map = _minor_ids(M, contracted | deleted)
    return Matroid(len(kept), MinorRank(M, contracted, tuple(kept))), id_map


def loops(M: Matroid) -> ElementSet:
    return mask_of(e for e in range(M.size) if M.rank(bit(e)) == 0)


def coloops(M: Matroid) -> ElementSet:
    return loops(dual(M))


def parallel_classes(M: Matroid) -> List[ElementSet]:
    classes: List[ElementSet] = []
    for e in iter_ids(M.ground & ~loops(M)):
        for i, cls in enumerate(classes):
            rep = (cls & -cls).bit_length() - 1
            if M.rank(bit(rep) | bit(e)) == 1:
                classes[i] = cls | bit(e)
                break
        else:
            classes.append(bit(e))
    return sorted(classes)


def series_classes(M: Matroid) -> List[ElementSet]:
    return parallel_classes(dual(M))


def simplify(M: Matroid) -> Tuple[Matroid, IdMap]:
    if M.full_rank == 0:
        raise RankZero("cannot simplify a rank-zero matroid")
    removed = loops(M)
    for cls in parallel_classes(M):
        removed |= cls & (cls - 1)  # all but the minimum id
    if removed:
        logging.debug("simplify drops %d elements", size(removed))
    return delete(M, removed)


def cosimplify(M: Matroid) -> Tuple[Matroid, IdMap]:
    if M.corank == 0:
        raise RankZero("cannot cosimplify a matroid of corank zero")
    S, id_map = simplify(dual(M))
    return dual(S), id_map


def bases(M: Matroid) -> List[ElementSet]:
    r = M.full_rank
    out = []
    for combo in combinations(range(M.size), r):
        mask = mask_of(combo)
        if M.rank(mask) == r:
            out.append(mask)
    return out


def _table_circuits(M: Matroid) -> List[ElementSet]:
    table = M.rank_table()
    assert table is not None
    out = []
    for mask in range(1, 1 << M.size):
        n = mask.bit_count()
        if table[mask] != n - 1:
            continue
        if all(table[mask ^ (1 << e)] == n - 1 for e in iter_ids(mask)):
            out.append(mask)
    return out


def circuits(M: Matroid) -> List[ElementSet]:
    def compute() -> List[ElementSet]:
        backend = M.backend
        if M.size > RANK_TABLE_LIMIT and isinstance(backend, GraphRank):
            return bonds(backend.graph) if backend.dual else cycles(backend.graph)
        if M.size > RANK_TABLE_LIMIT:
            return _search_circuits(M)
        return _table_circuits(M)

    return M.memo("circuits", compute)


def _search_circuits(M: Matroid) -> List[ElementSet]:
    # Depth-first over independent sets; a dependent extension is a circuit
    # exactly when every one-smaller subset is independent.
    found = set()

    def grow(current: ElementSet, start: int) -> None:
        n = size(current)
        for e in range(start, M.size):
            cand = current | bit(e)
            if M.rank(cand) == n + 1:
                grow(cand, e + 1)
            elif all(M.rank(cand ^ bit(f)) == n for f in iter_ids(current)):
                found.add(cand)

    grow(0, 0)
    return sorted(found)


def cocircuits(M: Matroid) -> List[ElementSet]:
    return circuits(dual(M))


def hyperplanes(M: Matroid) -> List[ElementSet]:
    return sorted(M.ground ^ c for c in cocircuits(M))


def closed_hyperplanes(M: Matroid) -> List[ElementSet]:
    """Hyperplanes found directly as closed sets of rank r(M)-1."""
    table = M.rank_table()
    if table is None:
        raise ValueError("direct hyperplane search needs a rank table")
    target = M.full_rank - 1
    out = []
    for mask in range(1 << M.size):
        if table[mask] != target:
            continue
        if all(table[mask | (1 << e)] > target for e in iter_ids(M.ground & ~mask)):
            out.append(mask)
    return out


def check_rank_axioms(M: Matroid) -> List[str]:
    """Brute-force rank axiom check; returns human-readable violations."""
    table = M.rank_table()
    if table is None:
        raise ValueError("axiom check needs a rank table")
    problems: List[str] = []
    if table[0] != 0:
        problems.append("rank of empty set is not zero")
    m = M.size
    for a in range(1 << m):
        ra = table[a]
        if ra < 0 or ra > a.bit_count():
            problems.append(f"rank out of bounds on mask {a}")
        for e in range(m):
            if not a >> e & 1:
                step = table[a | (1 << e)] - ra
                if step not in (0, 1):
                    problems.append(f"unit increase fails on mask {a} element {e}")
    # Unit increase plus local submodularity on pairs implies full submodularity.
    for a in range(1 << m):
        free = [e for e in range(m) if not a >> e & 1]
        for i, e in enumerate(free):
            for f in free[i + 1 :]:
                if table[a | (1 << e)] + table[a | (1 << f)] < table[a | (1 << e) | (1 << f)] + table[a]:
                    problems.append(f"submodularity fails on mask {a} elements {e},{f}")
    return problems
