"""Lemma suites: hypothesis => conclusion over every instantiation of a statement.

Small matroids are swept exhaustively; larger ones draw seeded samples. Each
suite feeds a Tally, so cases where the hypothesis held and cases where it did
not are counted apart, and every failure carries its full instantiation.
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Callable, Dict, Iterator, List, Sequence, Tuple, TypeVar

from .connectivity import (
    VerticalPartition,
    bixby_verdict,
    co_deletion_is_3connected,
    connectivity,
    cosegments,
    enumerate_separations,
    is_k_connected,
    is_vertical,
    k_separating_sets,
    maximal_segments,
    normalize_vertical,
    triads,
    triangles,
    vertical_partitions_at,
)
from .elements import ElementSet, bit, ids_of, iter_ids, lowest, relabel, size, submasks, subsets_of_size
from .errors import InternalContradiction, UnknownLemma
from .families import is_boundary_member, p_description_check
from .matroid import (
    RANK_TABLE_LIMIT,
    DualRank,
    GraphRank,
    Matroid,
    bases,
    check_rank_axioms,
    closed_hyperplanes,
    closure,
    coclosure,
    cocircuits,
    contract,
    dual,
    from_bases,
    hyperplanes,
    is_circuit,
    is_closed,
    series_classes,
)
from .utils import SweepSettings
from .verifier import (
    CERT_LIMIT,
    SIZE_LEMMA,
    Certificate,
    Tally,
    VerdictReport,
    cite,
    contraction_bad_set,
    property_hyperplanes,
    vertical_theorem_tally,
)

T = TypeVar("T")

# Up to this size the local-connectivity monotonicity suite walks every (X', X, Y', Y).
FULL_QUANTIFIER_MAX = 5
# Random subsets of the bad-contraction set tried by the minimal-partition suite.
J_SUBSETS = 4
# Y sets drawn per cosegment when sampling the cosegment-maximality suite.
COSEGMENT_Y_DRAWS = 16
ORACLE_BASES_MAX = 10
AXIOM_CHECK_MAX = 10


@dataclass
class SuiteRun:
    M: Matroid
    exhaustive: bool
    samples: int
    rng: random.Random

    def sample(self, items: Sequence[T]) -> Sequence[T]:
        if self.exhaustive or len(items) <= self.samples:
            return items
        return [items[self.rng.randrange(len(items))] for _ in range(self.samples)]

    def colorings(self, k: int) -> Iterator[List[ElementSet]]:
        """Ordered partitions of E into k possibly empty classes."""
        m = self.M.size
        if self.exhaustive:
            for colors in product(range(k), repeat=m):
                yield _classes(colors, k)
        else:
            for _ in range(self.samples):
                yield _classes([self.rng.randrange(k) for _ in range(m)], k)

    def element_splits(self) -> Iterator[Tuple[int, ElementSet]]:
        """Pairs (z, X) with X a subset of E - z."""
        M = self.M
        if self.exhaustive:
            for z in range(M.size):
                yield from ((z, X) for X in submasks(M.ground & ~bit(z)))
        else:
            for _ in range(self.samples):
                z = self.rng.randrange(M.size)
                yield z, self.rng.getrandbits(M.size) & M.ground & ~bit(z)


def _classes(colors: Sequence[int], k: int) -> List[ElementSet]:
    out = [0] * k
    for e, c in enumerate(colors):
        out[c] |= 1 << e
    return out


def _three_connected(run: SuiteRun, tally: Tally) -> bool:
    if is_k_connected(run.M, 3):
        return True
    tally.skipped()
    tally.extra["hypothesis"] = "not 3-connected"
    return False


def _local(M: Matroid, A: ElementSet, B: ElementSet) -> int:
    return M.rank(A) + M.rank(B) - M.rank(A | B)


def _all_vertical(M: Matroid) -> List[VerticalPartition]:
    out: List[VerticalPartition] = []
    for z in range(M.size):
        for p in vertical_partitions_at(M, z):
            out.extend((p, p.swapped()))
    return out


def uncrossing(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not _three_connected(run, tally):
        return
    seps = k_separating_sets(M, 3)
    if run.exhaustive:
        pairs: Sequence[Tuple[ElementSet, ElementSet]] = list(combinations_with_replacement(seps, 2))
    else:
        pairs = [(run.rng.choice(seps), run.rng.choice(seps)) for _ in range(run.samples)]
    for X, Y in pairs:
        meet, join = X & Y, X | Y
        rules = []
        if size(meet) >= 2:
            rules.append(("X|Y", join, 2))
        if size(M.ground & ~join) >= 2:
            rules.append(("X&Y", meet, 2))
        if size(meet) == 1:
            rules.append(("X|Y", join, 3))
        if not rules:
            tally.skipped()
            continue
        tally.held()
        for name, A, bound in rules:
            if connectivity(M, A) > bound:
                tally.fail(
                    cite(
                        M,
                        "uncrossing",
                        sets={"X": X, "Y": Y, name: A},
                        lambdas=("X", "Y", name),
                        note=f"lambda({name}) exceeds {bound}",
                    )
                )


def series_circuits(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not is_k_connected(M, 2):
        tally.skipped()
        return
    for X in series_classes(M):
        outside = closure(M, X) & ~X
        if not outside:
            tally.skipped()
            continue
        for y in iter_ids(outside):
            tally.held()
            if not is_circuit(M, X | bit(y)):
                tally.fail(
                    cite(M, "not-a-circuit", sets={"X": X, "X+y": X | bit(y)}, elements={"y": y}, ranks=("X", "X+y"))
                )


def coclosure_complement(run: SuiteRun, tally: Tally) -> None:
    M, D = run.M, dual(run.M)
    for z, X in run.element_splits():
        zb = bit(z)
        Y = M.ground & ~X & ~zb
        in_cl = M.rank(X | zb) == M.rank(X)
        in_cocl = D.rank(Y | zb) == D.rank(Y)
        tally.held()
        if in_cl == in_cocl:
            tally.fail(
                cite(
                    M,
                    "coclosure",
                    sets={"X": X, "X+z": X | zb, "Y": Y, "Y+z": Y | zb},
                    elements={"z": z},
                    ranks=("X", "X+z"),
                    coranks=("Y", "Y+z"),
                )
            )


def guts(run: SuiteRun, tally: Tally) -> None:
    M, D = run.M, dual(run.M)
    for z, X in run.element_splits():
        zb = bit(z)
        Y = M.ground & ~X & ~zb
        if connectivity(M, X) != connectivity(M, Y):
            tally.skipped()
            continue
        tally.held()
        spans = M.rank(X | zb) == M.rank(X) and M.rank(Y | zb) == M.rank(Y)
        cospans = D.rank(X | zb) == D.rank(X) and D.rank(Y | zb) == D.rank(Y)
        if not (spans or cospans):
            tally.fail(
                cite(
                    M,
                    "guts",
                    sets={"X": X, "X+z": X | zb, "Y": Y, "Y+z": Y | zb},
                    elements={"z": z},
                    ranks=("X", "X+z", "Y", "Y+z"),
                    coranks=("X", "X+z", "Y", "Y+z"),
                    lambdas=("X", "Y"),
                )
            )


def closure_segments(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not _three_connected(run, tally):
        return
    tri, tds = set(triangles(M)), set(triads(M))
    for A in run.sample(k_separating_sets(M, 3)):
        for kind, N, triples, op in (
            ("segment", closure(M, A) & ~A, tri, "ranks"),
            ("cosegment", coclosure(M, A) & ~A, tds, "coranks"),
        ):
            if size(N) < 3:
                tally.skipped()
                continue
            tally.held()
            if not all(t in triples for t in subsets_of_size(N, 3)):
                tally.fail(
                    cite(M, f"not-a-{kind}", sets={"A": A, "N": N}, lambdas=("A",), **{op: ("N",)})
                )


def cosegment_contractions(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not _three_connected(run, tally):
        return
    for D in maximal_segments(M, dualize=True):
        if size(D) < 4:
            tally.skipped()
            continue
        for d in iter_ids(D):
            tally.held()
            N, _ = contract(M, bit(d))
            if not is_k_connected(N, 3):
                tally.fail(cite(M, "contraction-separates", sets={"D": D}, elements={"d": d}, coranks=("D",)))


def contraction_separations(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not _three_connected(run, tally):
        return
    if M.size < 5:
        tally.skipped()
        return
    for z in range(M.size):
        zb = bit(z)
        N, _ = contract(M, zb)
        if is_k_connected(N, 3):
            tally.skipped()
            continue
        tally.held()
        if not is_k_connected(N, 2):
            tally.fail(cite(M, "contraction-disconnects", sets={"E-z": M.ground & ~zb}, elements={"z": z}))
            continue
        kept = ids_of(M.ground & ~zb)
        for rec in enumerate_separations(N, 2):
            X = relabel(rec.side, kept)
            Y = M.ground & ~X & ~zb
            ok = (
                connectivity(M, X) == 2
                and connectivity(M, Y) == 2
                and M.rank(X | zb) == M.rank(X)
                and M.rank(Y | zb) == M.rank(Y)
                and size(X) >= 2
                and size(Y) >= 2
            )
            if not ok:
                tally.fail(
                    cite(
                        M,
                        "contraction-separation",
                        sets={"X": X, "X+z": X | zb, "Y": Y, "Y+z": Y | zb},
                        elements={"z": z},
                        ranks=("X", "X+z", "Y", "Y+z"),
                        lambdas=("X", "Y"),
                    )
                )


def vertical_signature(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not _three_connected(run, tally):
        return
    bad = contraction_bad_set(M)
    for z in range(M.size):
        tally.held()
        parts = vertical_partitions_at(M, z)
        if bool(bad >> z & 1) != bool(parts):
            tally.fail(
                cite(
                    M,
                    "signature-mismatch",
                    sets={},
                    elements={"z": z},
                    extra={"partitions": len(parts)},
                    note=f"si(M/z) 3-connected: {not bad >> z & 1}",
                )
            )


def vertical_closure(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not _three_connected(run, tally):
        return
    for p in run.sample(_all_vertical(M)):
        tally.held()
        n = normalize_vertical(M, p)
        xb = bit(p.x)
        expected_X1 = p.X1 & ~closure(M, p.X2)
        ok = (
            is_vertical(M, n.X1, n.x, n.X2)
            and n.X1 == expected_X1
            and is_closed(M, n.X2 | xb)
            and normalize_vertical(M, n) == n
        )
        if not ok:
            tally.fail(
                cite(
                    M,
                    "normalization",
                    sets={"X1": p.X1, "X2": p.X2, "N1": n.X1, "N2": n.X2},
                    elements={"x": p.x},
                    ranks=("N1", "N2"),
                    lambdas=("N1", "N2"),
                )
            )


def bixby(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if M.size < 4:
        tally.skipped()
        return
    if not _three_connected(run, tally):
        return
    verdicts: Counter = Counter()
    for x in range(M.size):
        tally.held()
        try:
            verdicts[bixby_verdict(M, x).value] += 1
        except InternalContradiction as exc:
            tally.fail(cite(M, "neither", sets={}, elements={"x": x}, note=str(exc)))
    tally.extra["verdicts"] = dict(sorted(verdicts.items()))


def exact_partitions(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    ground = M.ground
    exact = [A for A in k_separating_sets(M, 3) if A and A != ground and connectivity(M, A) == 2]
    if not exact:
        tally.skipped()
        return
    exact_set = set(exact)
    triples: List[Tuple[ElementSet, ElementSet, ElementSet]] = []
    if run.exhaustive:
        for X in exact:
            if not X & 1:
                continue
            for Y in exact:
                Z = ground & ~X & ~Y
                if Y & X or not Z or lowest(Y) > lowest(Z):
                    continue
                triples.append((X, Y, Z))
    else:
        for _ in range(run.samples):
            X, Y = run.rng.choice(exact), run.rng.choice(exact)
            triples.append((X, Y, ground & ~X & ~Y))
    for X, Y, Z in triples:
        if X & Y or Z not in exact_set:
            tally.skipped()
            continue
        tally.held()
        values = {_local(M, X, Y), _local(M, X, Z), _local(M, Y, Z)}
        if len(values) != 1:
            tally.fail(
                cite(
                    M,
                    "local-connectivity-differs",
                    sets={"X": X, "Y": Y, "Z": Z, "X|Y": X | Y, "X|Z": X | Z, "Y|Z": Y | Z},
                    ranks=("X", "Y", "Z", "X|Y", "X|Z", "Y|Z"),
                    lambdas=("X", "Y", "Z"),
                )
            )


def _monotone_failure(M: Matroid, Xp: ElementSet, X: ElementSet, Yp: ElementSet, Y: ElementSet) -> Certificate:
    return cite(
        M,
        "local-connectivity-grows",
        sets={"X'": Xp, "X": X, "Y'": Yp, "Y": Y, "X'|Y'": Xp | Yp, "X|Y": X | Y},
        ranks=("X'", "X", "Y'", "Y", "X'|Y'", "X|Y"),
    )


def local_monotone(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    m = M.size
    if run.exhaustive and m <= FULL_QUANTIFIER_MAX:
        # Per element: outside X, in X - X', in X'; independently for Y.
        for states in product(range(9), repeat=m):
            Xp = X = Yp = Y = 0
            for e, s in enumerate(states):
                sx, sy = divmod(s, 3)
                if sx:
                    X |= 1 << e
                if sx == 2:
                    Xp |= 1 << e
                if sy:
                    Y |= 1 << e
                if sy == 2:
                    Yp |= 1 << e
            tally.held()
            if _local(M, Xp, Yp) > _local(M, X, Y):
                tally.fail(_monotone_failure(M, Xp, X, Yp, Y))
        return
    if run.exhaustive:
        # Single removals chain to every X' of X; the function is symmetric in its arguments.
        tally.extra["reduction"] = "single-removal"
        for only_x, only_y, both, _ in run.colorings(4):
            X, Y = only_x | both, only_y | both
            base = _local(M, X, Y)
            for e in iter_ids(X):
                tally.held()
                if _local(M, X & ~bit(e), Y) > base:
                    tally.fail(_monotone_failure(M, X & ~bit(e), X, Y, Y))
        return
    for only_x, only_y, both, _ in run.colorings(4):
        X, Y = only_x | both, only_y | both
        Xp = X & run.rng.getrandbits(m)
        Yp = Y & run.rng.getrandbits(m)
        tally.held()
        if _local(M, Xp, Yp) > _local(M, X, Y):
            tally.fail(_monotone_failure(M, Xp, X, Yp, Y))


def closure_transfer(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    for Xp, X_rest, Y, _ in run.colorings(4):
        X = Xp | X_rest
        r_X = M.rank(X)
        spanned = [y for y in iter_ids(Y) if M.rank(X | bit(y)) == r_X]
        if not spanned or _local(M, Xp, Y) != _local(M, X, Y):
            tally.skipped()
            continue
        r_Xp = M.rank(Xp)
        for y in spanned:
            tally.held()
            if M.rank(Xp | bit(y)) != r_Xp:
                tally.fail(
                    cite(
                        M,
                        "closure-lost",
                        sets={"X'": Xp, "X": X, "Y": Y, "X'+y": Xp | bit(y), "X'|Y": Xp | Y, "X|Y": X | Y},
                        elements={"y": y},
                        ranks=("X'", "X", "Y", "X'+y", "X'|Y", "X|Y"),
                    )
                )


def size_lemma(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not _three_connected(run, tally):
        return
    for H in property_hyperplanes(M):
        tally.held()
        if M.size < 7:
            tally.fail(cite(M, "small-property-hyperplane", sets={"H": H}, ranks=("H",), extra={"size": M.size}))


def _segment_instances(M: Matroid) -> List[Tuple[ElementSet, int, int]]:
    """(A, e, t): 3-separations with r(A) = 3, r(A - e) = 2 and t = |A - e - cl(B)| >= 3."""
    out = []
    for A in k_separating_sets(M, 3):
        B = M.ground & ~A
        if size(A) < 3 or size(B) < 3 or M.rank(A) != 3:
            continue
        cl_B = closure(M, B)
        for e in iter_ids(A):
            line = A & ~bit(e)
            if M.rank(line) != 2:
                continue
            t = size(line & ~cl_B)
            if t >= 3:
                out.append((A, e, t))
    return out


def segment_cosegment(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not _three_connected(run, tally):
        return
    bad = contraction_bad_set(M)
    instances = _segment_instances(M)
    if not instances:
        tally.skipped()
        return
    segs = cosegments(M)
    for A, e, t in run.sample(instances):
        line = A & ~bit(e)
        if line & ~bad:
            tally.skipped()
            continue
        tally.held()
        found = any(D >> e & 1 and size(D) - 1 >= t and connectivity(M, A | D) <= 2 for D in segs)
        if not found:
            tally.fail(
                cite(
                    M,
                    "no-cosegment",
                    sets={"A": A, "A-e": line},
                    elements={"e": e},
                    ranks=("A", "A-e"),
                    lambdas=("A",),
                    extra={"t": t},
                )
            )


def segment_hyperplanes(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not _three_connected(run, tally):
        return
    bad = contraction_bad_set(M)
    instances = _segment_instances(M)
    if not instances:
        tally.skipped()
        return
    hps = hyperplanes(M)
    for A, e, _t in run.sample(instances):
        line = A & ~bit(e)
        containing = [H for H in hps if line & ~H == 0]
        if not containing:
            tally.skipped()
            continue
        for H in containing:
            tally.held()
            if H & ~bad == 0:
                tally.fail(
                    cite(M, "hyperplane-all-bad", sets={"A": A, "A-e": line, "H": H}, elements={"e": e}, ranks=("A-e", "H"))
                )


def minimal_partition(run: SuiteRun, tally: Tally) -> None:
    """Descend from (X1, x, X2) to a partition whose first side has no nested vertical side.

    The conclusion checked is the one the descent guarantees: every j in
    Z1 & J has no vertical partition with a side inside Z1. The stronger
    reading (both sides of every such partition meet X2) is counted in
    `x2_sides_unmet` and does not fail the suite.
    """
    M = run.M
    if not _three_connected(run, tally):
        return
    bad = contraction_bad_set(M)
    if not bad:
        tally.skipped()
        return
    oriented: Dict[int, List[VerticalPartition]] = {}
    for y in iter_ids(bad):
        oriented[y] = [q for p in vertical_partitions_at(M, y) for q in (p, p.swapped())]

    choices = [bad]
    for _ in range(J_SUBSETS):
        J = bad & run.rng.getrandbits(M.size)
        if J and J not in choices:
            choices.append(J)

    x2_unmet = 0
    for J in choices:
        for x in iter_ids(J):
            for p in oriented[x]:
                X1, X2 = p.X1, p.X2
                scope = (X1 | bit(x)) & J
                hypothesis = all(q.X1 & J for y in iter_ids(scope) for q in oriented[y] if q.X1 & ~X1 == 0)
                if not hypothesis:
                    tally.skipped()
                    continue
                tally.held()

                def candidate(q: VerticalPartition) -> bool:
                    return not q.X1 & ~X1 and bool(q.X1 & J) and is_closed(M, q.X2 | bit(q.x))

                def unnested(q: VerticalPartition) -> bool:
                    return all(r.X1 & ~q.X1 for j in iter_ids(q.X1 & J) for r in oriented[j])

                def meets_x2(q: VerticalPartition) -> bool:
                    return all(r.X1 & X2 and r.X2 & X2 for j in iter_ids(q.X1 & J) for r in oriented[j])

                found = [q for z in iter_ids(scope) for q in oriented[z] if candidate(q)]
                if not any(meets_x2(q) for q in found):
                    x2_unmet += 1
                if not any(unnested(q) for q in found):
                    tally.fail(
                        cite(
                            M,
                            "no-minimal-partition",
                            sets={"X1": X1, "X2": X2, "J": J},
                            elements={"x": x},
                            ranks=("X1", "X2"),
                            lambdas=("X1", "X2"),
                        )
                    )
    tally.extra["x2_sides_unmet"] = x2_unmet


def vertical_theorem_suite(run: SuiteRun, tally: Tally) -> None:
    if not _three_connected(run, tally):
        return
    vertical_theorem_tally(run.M, tally)


def hyperplane_sides(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not _three_connected(run, tally):
        return
    found = property_hyperplanes(M)
    if not found:
        tally.skipped()
        return
    for H in found:
        C = M.ground & ~H
        for x in iter_ids(H):
            for p in vertical_partitions_at(M, x):
                tally.held()
                if not all(side & H and side & C for side in (p.X1, p.X2)):
                    tally.fail(
                        cite(
                            M,
                            "side-misses",
                            sets={"H": H, "C": C, "X1": p.X1, "X2": p.X2},
                            elements={"x": x},
                            ranks=("H",),
                            lambdas=("X1", "X2"),
                        )
                    )


def _extends_cosegment(X: ElementSet, e: int, tds: set) -> bool:
    eb = bit(e)
    return all(pair | eb in tds for pair in subsets_of_size(X, 2))


def cosegment_maximality(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not _three_connected(run, tally):
        return
    segs = cosegments(M)
    if not segs:
        tally.skipped()
        return
    tds = set(triads(M))
    for X in run.sample(segs):
        rest = M.ground & ~X
        if run.exhaustive:
            ys: Sequence[ElementSet] = list(submasks(rest))
        else:
            ys = [rest & run.rng.getrandbits(M.size) for _ in range(COSEGMENT_Y_DRAWS)]
        for Y in ys:
            if not any(_local(M, X & ~bit(x), Y) >= 1 for x in iter_ids(X)):
                tally.skipped()
                continue
            tally.held()
            for e in iter_ids(rest & ~Y):
                if _extends_cosegment(X, e, tds):
                    tally.fail(
                        cite(
                            M,
                            "cosegment-extends",
                            sets={"X": X, "Y": Y, "X+e": X | bit(e)},
                            elements={"e": e},
                            coranks=("X", "X+e"),
                        )
                    )


def cohyperplane_description(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    if not _three_connected(run, tally):
        return
    tris = triangles(M)
    if not tris:
        tally.skipped()
        return
    described = None
    for C in tris:
        H = M.ground & ~C
        if any(co_deletion_is_3connected(M, h) for h in iter_ids(H)):
            tally.skipped()
            continue
        tally.held()
        if described is None:
            described = p_description_check(M)
            if not described and is_boundary_member(dual(M)) is not None:
                # M(K~3,2) has the cohyperplane but only two triads beside the triangle.
                tally.extra["boundary"] = True
                described = True
        if not described:
            tally.fail(cite(M, "no-description", sets={"C": C, "H": H}, ranks=("C",), coranks=("H",)))


def _subsets_for(run: SuiteRun) -> Sequence[ElementSet]:
    if run.exhaustive:
        return range(1 << run.M.size)
    return [run.rng.getrandbits(run.M.size) for _ in range(run.samples)]


def oracles(run: SuiteRun, tally: Tally) -> None:
    M = run.M
    backend = M.backend
    if isinstance(backend, GraphRank) and M.size <= ORACLE_BASES_MAX:
        listed = from_bases(M.size, bases(M))
        for A in range(1 << M.size):
            tally.held()
            if listed.rank(A) != M.rank(A):
                tally.fail(
                    cite(M, "graph-rank", sets={"A": A}, ranks=("A",), extra={"bases_rank": listed.rank(A)})
                )

    cocs = set(cocircuits(M))
    hps = hyperplanes(M)
    for H in hps:
        tally.held()
        if (M.ground & ~H) not in cocs or M.rank(H) != M.full_rank - 1 or not is_closed(M, H):
            tally.fail(cite(M, "hyperplane", sets={"H": H}, ranks=("H",)))
    if M.size <= RANK_TABLE_LIMIT:
        tally.held()
        direct = closed_hyperplanes(M)
        if direct != hps:
            tally.fail(
                cite(
                    M,
                    "hyperplane-listing",
                    sets={},
                    extra={"from_cocircuits": len(hps), "closed_search": len(direct)},
                )
            )

    # The memoized dual would hand M back; build the double view explicitly.
    twice = Matroid(M.size, DualRank(Matroid(M.size, DualRank(M))))
    for A in _subsets_for(run):
        tally.held()
        if twice.rank(A) != M.rank(A):
            tally.fail(cite(M, "dual-involution", sets={"A": A}, ranks=("A",), extra={"double_dual_rank": twice.rank(A)}))

    if M.size <= AXIOM_CHECK_MAX:
        tally.held()
        problems = check_rank_axioms(M)
        if problems:
            tally.fail(cite(M, "rank-axioms", sets={}, extra={"violations": len(problems)}, note=problems[0]))


Suite = Callable[[SuiteRun, Tally], None]

SUITES: Dict[str, Suite] = {
    "2.1": uncrossing,
    "2.2": series_circuits,
    "2.3": coclosure_complement,
    "2.4": guts,
    "2.5": closure_segments,
    "2.6": cosegment_contractions,
    "2.7": contraction_separations,
    "2.8": vertical_signature,
    "2.9": vertical_closure,
    "2.10": bixby,
    "2.11": exact_partitions,
    "2.12": local_monotone,
    "2.13": closure_transfer,
    "3.1": size_lemma,
    "3.2": segment_cosegment,
    "3.3": segment_hyperplanes,
    "3.4": minimal_partition,
    "3.5": vertical_theorem_suite,
    "3.6": hyperplane_sides,
    "3.7": cosegment_maximality,
    "3.8": cohyperplane_description,
    "oracles": oracles,
}

SUITE_ORDER: Tuple[str, ...] = tuple(SUITES)


def check_name(which: str) -> str:
    return SIZE_LEMMA if which == "3.1" else f"lemma_suite({which})"


def _run_one(M: Matroid, which: str, subject: str, settings: SweepSettings) -> VerdictReport:
    exhaustive = M.size <= settings.exhaustive_max
    mode = "exhaustive" if exhaustive else "sampled"
    if which != "oracles" and M.size > settings.sample_max:
        logging.warning("Skipping suite %s on %s: %d elements", which, subject, M.size)
        tally = Tally(subject, check_name(which), mode="skipped")
        tally.skipped()
        return tally.report()
    if M.size <= RANK_TABLE_LIMIT:
        M.rank_table()
        dual(M).rank_table()
    tally = Tally(subject, check_name(which), mode=mode, seed=None if exhaustive else settings.seed)
    run = SuiteRun(M=M, exhaustive=exhaustive, samples=settings.samples, rng=random.Random(f"{settings.seed}/{which}"))
    SUITES[which](run, tally)
    report = tally.report()
    logging.info(
        "%s %s: cases=%d vacuous=%d passed=%s", report.check, subject, report.cases, report.vacuous, report.passed
    )
    return report


def merge_reports(subject: str, check: str, reports: Sequence[VerdictReport]) -> VerdictReport:
    # Failures first so a failed merge always keeps at least one of them.
    failed = [c for r in reports if not r.passed for c in r.certificates if c.kind not in ("witness", "review")]
    reviews = [c for r in reports for c in r.certificates if c.kind == "review"]
    certs = failed[:CERT_LIMIT] + reviews[:CERT_LIMIT]
    modes = {r.stats.get("mode") for r in reports}
    stats = {
        "cases": sum(r.cases for r in reports),
        "vacuous": sum(r.vacuous for r in reports),
        "failures": sum(int(r.stats.get("failures", 0)) for r in reports),
        "mode": modes.pop() if len(modes) == 1 else "mixed",
        "suites": len(reports),
    }
    seeds = {r.stats["seed"] for r in reports if "seed" in r.stats}
    if seeds:
        stats["seed"] = min(seeds)
    return VerdictReport(
        subject=subject,
        check=check,
        passed=all(r.passed for r in reports),
        certificates=tuple(certs),
        stats=stats,
    )


def run_lemma_suite(
    M: Matroid,
    which: str = "all",
    subject: str = "M",
    *,
    settings: SweepSettings = SweepSettings(),
) -> VerdictReport:
    if which == "all":
        reports = [_run_one(M, w, subject, settings) for w in SUITE_ORDER]
        return merge_reports(subject, check_name("all"), reports)
    if which not in SUITES:
        raise UnknownLemma(f"unknown lemma suite {which!r}; expected one of {', '.join(SUITE_ORDER)} or all")
    return _run_one(M, which, subject, settings)
