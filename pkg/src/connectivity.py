from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from enum import Enum
from itertools import combinations
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from .elements import ElementSet, bit, check_mask, format_set, ids_of, iter_ids, mask_of, size
from .errors import InternalContradiction, NotThreeConnected
from .matroid import Matroid, closure, contract, cosimplify, delete, dual, simplify


def connectivity(M: Matroid, A: ElementSet) -> int:
    """The connectivity function r(A) + r(E - A) - r(M)."""
    check_mask(A, M.size)
    return M.rank(A) + M.rank(M.ground ^ A) - M.full_rank


def local_connectivity(M: Matroid, A: ElementSet, B: ElementSet) -> int:
    check_mask(A | B, M.size)
    return M.rank(A) + M.rank(B) - M.rank(A | B)


def _split(
    elements: Sequence[int],
    a: ElementSet,
    b: ElementSet,
    prune: Callable[[ElementSet, ElementSet], bool],
) -> Iterator[Tuple[ElementSet, ElementSet]]:
    """Yield complete two-way splits of `elements` extending (a, b) that survive `prune`."""
    if prune(a, b):
        return
    if not elements:
        yield a, b
        return
    e = 1 << elements[0]
    rest = elements[1:]
    yield from _split(rest, a | e, b, prune)
    yield from _split(rest, a, b | e, prune)


def _lambda_pruned_sides(M: Matroid, bound: int) -> Iterator[Tuple[ElementSet, ElementSet]]:
    # r is monotone, so r(a) + r(b) - r(M) only grows as the split is completed.
    full = M.full_rank
    rank = M.rank

    def prune(a: ElementSet, b: ElementSet) -> bool:
        return rank(a) + rank(b) - full > bound

    yield from _split(list(range(1, M.size)), 1, 0, prune)


def find_separation(M: Matroid, k: int) -> Optional[ElementSet]:
    """A side of some j-separation with j < k, or None when M is k-connected."""
    if k not in (2, 3):
        raise ValueError("connectivity is only decided for k = 2 or 3")

    def compute() -> Optional[ElementSet]:
        full = M.full_rank
        for a, b in _lambda_pruned_sides(M, k - 2):
            lam = M.rank(a) + M.rank(b) - full
            small = min(size(a), size(b))
            if any(lam <= j - 1 and small >= j for j in range(1, k)):
                return a
        return None

    return M.memo(("separation", k), compute)


def is_k_connected(M: Matroid, k: int) -> bool:
    return find_separation(M, k) is None


def require_3connected(M: Matroid) -> None:
    side = find_separation(M, 3)
    if side is not None:
        raise NotThreeConnected(f"matroid has a low-order separation with side {ids_of(side)}")


@dataclass(frozen=True)
class SeparationRecord:
    side: ElementSet
    order: int
    exact: bool


def enumerate_separations(M: Matroid, k: int, *, min_side: int = 2) -> List[SeparationRecord]:
    """k-separating sides with both sides of size >= min_side, one per complementary pair."""
    if k not in (2, 3, 4):
        raise ValueError("separations are enumerated for k in 2..4")
    full = M.full_rank
    out = []
    for a, b in _lambda_pruned_sides(M, k - 1):
        if size(a) < min_side or size(b) < min_side:
            continue
        lam = M.rank(a) + M.rank(b) - full
        out.append(SeparationRecord(side=a, order=lam, exact=lam == k - 1))
    return sorted(out, key=lambda rec: rec.side)


def k_separating_sets(M: Matroid, k: int) -> List[ElementSet]:
    """Every A with connectivity at most k-1, complements included, sorted by mask."""

    def compute() -> List[ElementSet]:
        found = []
        for a, b in _lambda_pruned_sides(M, k - 1):
            found.append(a)
            found.append(b)
        return sorted(found)

    return M.memo(("k-separating", k), compute)


@dataclass(frozen=True)
class VerticalPartition:
    X1: ElementSet
    x: int
    X2: ElementSet
    lambda_value: int
    rank_X1: int
    rank_X2: int

    def swapped(self) -> "VerticalPartition":
        return replace(self, X1=self.X2, X2=self.X1, rank_X1=self.rank_X2, rank_X2=self.rank_X1)

    def describe(self) -> str:
        return f"X1={format_set(self.X1)} x={self.x} X2={format_set(self.X2)} r1={self.rank_X1} r2={self.rank_X2}"


def is_vertical(M: Matroid, X1: ElementSet, x: int, X2: ElementSet) -> bool:
    xb = bit(x)
    if X1 & X2 or (X1 | X2) & xb or (X1 | X2 | xb) != M.ground:
        return False
    r1, r2 = M.rank(X1), M.rank(X2)
    return (
        r1 >= 3
        and r2 >= 3
        and M.rank(X1 | xb) == r1
        and M.rank(X2 | xb) == r2
        and r1 + r2 - M.full_rank == 2
    )


def vertical_partitions_at(M: Matroid, z: int) -> List[VerticalPartition]:
    def compute() -> List[VerticalPartition]:
        zb = bit(z)
        others = ids_of(M.ground & ~zb)
        if len(others) < 2:
            return []
        full = M.full_rank
        rank = M.rank

        def prune(a: ElementSet, b: ElementSet) -> bool:
            return rank(a) + rank(b | zb) - full > 2 or rank(a | zb) + rank(b) - full > 2

        out = []
        for a, b in _split(others[1:], bit(others[0]), 0, prune):
            if b and is_vertical(M, a, z, b):
                out.append(VerticalPartition(a, z, b, 2, rank(a), rank(b)))
        return sorted(out, key=lambda p: p.X1)

    return M.memo(("vertical", z), compute)


def vertical_3_partitions(M: Matroid) -> List[VerticalPartition]:
    require_3connected(M)
    out: List[VerticalPartition] = []
    for z in range(M.size):
        out.extend(vertical_partitions_at(M, z))
    return out


def normalize_vertical(M: Matroid, p: VerticalPartition) -> VerticalPartition:
    """Move cl(X2) into the second side so that X2 | {x} becomes closed."""
    cl2 = closure(M, p.X2)
    X2 = cl2 & ~bit(p.x)
    X1 = p.X1 & ~cl2
    if X1 == p.X1:
        return p
    return VerticalPartition(X1, p.x, X2, 2, M.rank(X1), M.rank(X2))


def si_contraction_is_3connected(M: Matroid, e: int) -> bool:
    def compute() -> bool:
        # si of a rank-zero contraction is empty, hence 3-connected.
        if M.full_rank <= 1:
            return True
        N, _ = contract(M, bit(e))
        S, _ = simplify(N)
        return is_k_connected(S, 3)

    return M.memo(("si-contract", e), compute)


def co_deletion_is_3connected(M: Matroid, e: int) -> bool:
    def compute() -> bool:
        if M.corank <= 1:
            return True
        N, _ = delete(M, bit(e))
        C, _ = cosimplify(N)
        return is_k_connected(C, 3)

    return M.memo(("co-delete", e), compute)


class Verdict(str, Enum):
    DELETE_OK = "delete_ok"
    CONTRACT_OK = "contract_ok"
    BOTH = "both"


def bixby_verdict(M: Matroid, x: int) -> Verdict:
    if M.size < 4:
        raise ValueError("Bixby verdicts need at least four elements")
    require_3connected(M)
    delete_ok = co_deletion_is_3connected(M, x)
    contract_ok = si_contraction_is_3connected(M, x)
    if delete_ok and contract_ok:
        return Verdict.BOTH
    if delete_ok:
        return Verdict.DELETE_OK
    if contract_ok:
        return Verdict.CONTRACT_OK
    raise InternalContradiction(f"element {x}: neither co(M\\x) nor si(M/x) is 3-connected")


def triangles(M: Matroid) -> List[ElementSet]:
    def compute() -> List[ElementSet]:
        out = []
        for combo in combinations(range(M.size), 3):
            t = mask_of(combo)
            if M.rank(t) == 2 and all(M.rank(t ^ bit(e)) == 2 for e in combo):
                out.append(t)
        return out

    return M.memo("triangles", compute)


def triads(M: Matroid) -> List[ElementSet]:
    return triangles(dual(M))


def maximal_segments(M: Matroid, dualize: bool = False) -> List[ElementSet]:
    N = dual(M) if dualize else M
    found = set()
    for t in triangles(N):
        line = t
        for e in iter_ids(N.ground & ~t):
            if N.rank(bit(e)) == 1 and N.rank(t | bit(e)) == 2:
                line |= bit(e)
        found.add(line)
    return sorted(found)


_OTHER = {"triangle": "triad", "triad": "triangle"}


def _triple_types(triangle_set: set, triad_set: set, triple: ElementSet) -> List[str]:
    kinds = []
    if triple in triangle_set:
        kinds.append("triangle")
    if triple in triad_set:
        kinds.append("triad")
    return kinds


def is_fan(M: Matroid, seq: Sequence[int]) -> bool:
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    tri, tds = set(triangles(M)), set(triads(M))
    for first in ("triangle", "triad"):
        kind = first
        ok = True
        for i in range(len(seq) - 2):
            if kind not in _triple_types(tri, tds, mask_of(seq[i : i + 3])):
                ok = False
                break
            kind = _OTHER[kind]
        if ok:
            return True
    return False


def fans(M: Matroid) -> List[Tuple[int, ...]]:
    """Maximal fans of length at least four, each listed once up to reversal."""
    tri, tds = set(triangles(M)), set(triads(M))
    found = set()

    def extendable_front(seq: List[int], first_kind: str) -> bool:
        used = mask_of(seq)
        need = _OTHER[first_kind]
        return any(
            need in _triple_types(tri, tds, bit(f) | bit(seq[0]) | bit(seq[1]))
            for f in iter_ids(M.ground & ~used)
        )

    def grow(seq: List[int], first_kind: str, last_kind: str) -> None:
        used = mask_of(seq)
        need = _OTHER[last_kind]
        extended = False
        for f in iter_ids(M.ground & ~used):
            if need in _triple_types(tri, tds, bit(seq[-2]) | bit(seq[-1]) | bit(f)):
                extended = True
                grow(seq + [f], first_kind, need)
        if not extended and len(seq) >= 4 and not extendable_front(seq, first_kind):
            key = min(tuple(seq), tuple(reversed(seq)))
            found.add(key)

    for t in sorted(tri | tds):
        for kind in _triple_types(tri, tds, t):
            for order in _orderings(t):
                grow(list(order), kind, kind)
    logging.debug("found %d maximal fans", len(found))
    return sorted(found)


def _orderings(t: ElementSet) -> List[Tuple[int, ...]]:
    a, b, c = ids_of(t)
    return [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]


def cosegments(M: Matroid) -> List[ElementSet]:
    """Every cosegment of size at least three, sorted by mask."""
    found = set()
    for seg in maximal_segments(M, dualize=True):
        ids = ids_of(seg)
        for k in range(3, len(ids) + 1):
            for combo in combinations(ids, k):
                found.add(mask_of(combo))
    return sorted(found)


def is_cosegment(M: Matroid, D: ElementSet) -> bool:
    tds = set(triads(M))
    return size(D) >= 3 and all(mask_of(c) in tds for c in combinations(ids_of(D), 3))

