"""Matroid isomorphism by circuit-preserving backtracking.

Elements are first split into classes by an invariant profile (how many
circuits of each size contain them). The search assigns elements in an
order that starts with the rarest class and then follows circuit adjacency,
rejecting a partial map as soon as a fully mapped circuit of either side
lands on a non-circuit.
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .elements import ElementSet, bit, ids_of, iter_ids, mask_of, relabel
from .errors import InternalContradiction, TargetTooLarge
from .matroid import Matroid, circuits, is_independent, minor

EXHAUSTIVE_CERTIFY_MAX = 10
MINOR_TARGET_MAX = 10

Profile = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class Fingerprint:
    size: int
    rank: int
    circuit_sizes: Profile
    element_profiles: Tuple[Profile, ...]


def element_profiles(M: Matroid) -> List[Profile]:
    def compute() -> List[Profile]:
        counts: List[Counter] = [Counter() for _ in range(M.size)]
        for c in circuits(M):
            n = c.bit_count()
            for e in iter_ids(c):
                counts[e][n] += 1
        return [tuple(sorted(cnt.items())) for cnt in counts]

    return M.memo("element-profiles", compute)


def fingerprint(M: Matroid) -> Fingerprint:
    def compute() -> Fingerprint:
        sizes = Counter(c.bit_count() for c in circuits(M))
        return Fingerprint(
            size=M.size,
            rank=M.full_rank,
            circuit_sizes=tuple(sorted(sizes.items())),
            element_profiles=tuple(sorted(element_profiles(M))),
        )

    return M.memo("fingerprint", compute)


def _search_order(M: Matroid, profiles: List[Profile], class_sizes: Counter) -> List[int]:
    by_elem: List[List[ElementSet]] = [[] for _ in range(M.size)]
    for c in circuits(M):
        for e in iter_ids(c):
            by_elem[e].append(c)
    order: List[int] = []
    placed = 0
    remaining = set(range(M.size))
    while remaining:
        # Prefer elements tied to the mapped part by many small circuits, then rare classes.
        def score(e: int) -> Tuple[int, int, int]:
            links = sum(1 for c in by_elem[e] if c & placed and c.bit_count() <= 4)
            return (-links, class_sizes[profiles[e]], e)

        nxt = min(remaining, key=score)
        order.append(nxt)
        placed |= bit(nxt)
        remaining.discard(nxt)
    return order


def _backtrack(M1: Matroid, M2: Matroid) -> Optional[List[int]]:
    p1, p2 = element_profiles(M1), element_profiles(M2)
    class_sizes = Counter(p1)
    order = _search_order(M1, p1, class_sizes)
    circ1, circ2 = set(circuits(M1)), set(circuits(M2))
    by_elem1: List[List[ElementSet]] = [[] for _ in range(M1.size)]
    by_elem2: List[List[ElementSet]] = [[] for _ in range(M2.size)]
    for c in circ1:
        for e in iter_ids(c):
            by_elem1[e].append(c)
    for c in circ2:
        for f in iter_ids(c):
            by_elem2[f].append(c)
    candidates = {prof: [f for f in range(M2.size) if p2[f] == prof] for prof in set(p1)}

    fwd = [-1] * M1.size
    back = [-1] * M2.size

    def consistent(e: int, f: int, domain: ElementSet, image: ElementSet) -> bool:
        for c in by_elem1[e]:
            if c & ~domain == 0:
                if mask_of(fwd[g] for g in iter_ids(c)) not in circ2:
                    return False
        for d in by_elem2[f]:
            if d & ~image == 0:
                if mask_of(back[g] for g in iter_ids(d)) not in circ1:
                    return False
        return True

    def assign(i: int, domain: ElementSet, image: ElementSet) -> bool:
        if i == len(order):
            return True
        e = order[i]
        for f in candidates.get(p1[e], []):
            if back[f] != -1:
                continue
            fwd[e], back[f] = f, e
            nd, ni = domain | bit(e), image | bit(f)
            if consistent(e, f, nd, ni) and assign(i + 1, nd, ni):
                return True
            fwd[e], back[f] = -1, -1
        return False

    if assign(0, 0, 0):
        return fwd
    return None


def _certify(M1: Matroid, M2: Matroid, mapping: List[int], *, seed: int, samples: int) -> bool:
    if M1.size <= EXHAUSTIVE_CERTIFY_MAX:
        return all(M1.rank(a) == M2.rank(relabel(a, mapping)) for a in range(1 << M1.size))
    rng = random.Random(seed)
    for _ in range(samples):
        a = rng.getrandbits(M1.size)
        if M1.rank(a) != M2.rank(relabel(a, mapping)):
            return False
    return True


def is_isomorphic(M1: Matroid, M2: Matroid, *, seed: int = 0, samples: int = 1000) -> Optional[Dict[int, int]]:
    """A rank-preserving bijection from M1's elements to M2's, or None."""
    if fingerprint(M1) != fingerprint(M2):
        return None
    mapping = _backtrack(M1, M2)
    if mapping is None:
        return None
    if not _certify(M1, M2, mapping, seed=seed, samples=samples):
        raise InternalContradiction("circuit-preserving bijection disagrees on rank")
    return {e: f for e, f in enumerate(mapping)}


def has_minor(M: Matroid, target: Matroid) -> bool:
    if target.size > M.size or target.size > MINOR_TARGET_MAX:
        raise TargetTooLarge(f"target of size {target.size} is too large for a matroid of size {M.size}")
    n_contract = M.full_rank - target.full_rank
    n_delete = M.corank - target.corank
    if n_contract < 0 or n_delete < 0:
        return False
    want = fingerprint(target)
    ground = ids_of(M.ground)
    for cc in combinations(ground, n_contract):
        C = mask_of(cc)
        if not is_independent(M, C):
            continue
        rest = [e for e in ground if not C >> e & 1]
        for dd in combinations(rest, n_delete):
            D = mask_of(dd)
            # D must be coindependent in M/C, i.e. deleting it keeps the rank.
            if M.rank(M.ground & ~D) != M.full_rank:
                continue
            N, _ = minor(M, C, D)
            if N.full_rank != target.full_rank or fingerprint(N) != want:
                continue
            if is_isomorphic(N, target) is not None:
                logging.debug("minor found: contract %s delete %s", cc, dd)
                return True
    return False
