"""Verdicts for the hyperplane characterization and the vertical-partition theorem.

A VerdictReport always carries enough sets and cited values to be checked
again by hand: `revalidate` recomputes every cited rank, corank and
connectivity value from the matroid alone.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from .connectivity import (
    connectivity,
    require_3connected,
    si_contraction_is_3connected,
    vertical_partitions_at,
)
from .elements import ElementSet, ids_of, iter_ids, mask_of
from .families import is_boundary_member, is_in_P_star
from .matroid import Matroid, dual, hyperplanes
from .utils import SweepSettings

# Certificates kept per category; the stats still count every case.
CERT_LIMIT = 8

MAIN_THEOREM = "main_theorem"
VERTICAL_THEOREM = "vertical_theorem"
SIZE_LEMMA = "size_lemma"


@dataclass(frozen=True)
class Certificate:
    kind: str
    sets: Tuple[Tuple[str, ElementSet], ...] = ()
    elements: Tuple[Tuple[str, int], ...] = ()
    values: Tuple[Tuple[str, int], ...] = ()
    note: str = ""

    def set(self, name: str) -> ElementSet:
        return dict(self.sets)[name]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "sets": {name: ids_of(mask) for name, mask in self.sets},
            "elements": dict(self.elements),
            "values": dict(self.values),
            "note": self.note,
        }


def _value(M: Matroid, op: str, mask: ElementSet) -> int:
    if op == "r":
        return M.rank(mask)
    if op == "r*":
        return dual(M).rank(mask)
    if op == "lambda":
        return connectivity(M, mask)
    raise ValueError(f"unknown cited quantity {op!r}")


def cite(
    M: Matroid,
    kind: str,
    *,
    sets: Mapping[str, ElementSet],
    elements: Optional[Mapping[str, int]] = None,
    ranks: Sequence[str] = (),
    coranks: Sequence[str] = (),
    lambdas: Sequence[str] = (),
    extra: Optional[Mapping[str, int]] = None,
    note: str = "",
) -> Certificate:
    """Build a certificate whose values are computed from M now.

    `ranks`, `coranks` and `lambdas` name entries of `sets`; `extra` holds
    plain integers (sizes, family indices) that revalidation ignores.
    """
    values: List[Tuple[str, int]] = []
    for op, names in (("r", ranks), ("r*", coranks), ("lambda", lambdas)):
        for name in names:
            values.append((f"{op}:{name}", _value(M, op, sets[name])))
    values.extend((extra or {}).items())
    return Certificate(
        kind=kind,
        sets=tuple(sets.items()),
        elements=tuple((elements or {}).items()),
        values=tuple(values),
        note=note,
    )


def revalidate(M: Matroid, cert: Certificate) -> bool:
    """True when every cited r / r* / lambda value reproduces on M."""
    named = dict(cert.sets)
    for key, expected in cert.values:
        op, sep, name = key.partition(":")
        if not sep:
            continue
        if name not in named:
            return False
        if _value(M, op, named[name]) != expected:
            return False
    return True


@dataclass(frozen=True)
class VerdictReport:
    subject: str
    check: str
    passed: bool
    certificates: Tuple[Certificate, ...] = ()
    stats: Dict[str, Any] = field(default_factory=dict)

    @property
    def cases(self) -> int:
        return int(self.stats.get("cases", 0))

    @property
    def vacuous(self) -> int:
        return int(self.stats.get("vacuous", 0))

    @property
    def review(self) -> bool:
        return any(c.kind == "review" for c in self.certificates)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "check": self.check,
            "passed": self.passed,
            "stats": dict(self.stats),
            "certificates": [c.to_dict() for c in self.certificates],
        }


class Tally:
    """Running counts for one (matroid, check) unit."""

    def __init__(self, subject: str, check: str, *, mode: str = "exhaustive", seed: Optional[int] = None) -> None:
        self.subject = subject
        self.check = check
        self.mode = mode
        self.seed = seed
        self.cases = 0
        self.vacuous = 0
        self.failures = 0
        self._failed: List[Certificate] = []
        self._reviews: List[Certificate] = []
        self._witnesses: List[Certificate] = []
        self.extra: Dict[str, Any] = {}

    def held(self, n: int = 1) -> None:
        self.cases += n

    def skipped(self, n: int = 1) -> None:
        self.vacuous += n

    def fail(self, cert: Certificate) -> None:
        self.failures += 1
        if len(self._failed) < CERT_LIMIT:
            self._failed.append(cert)
        logging.warning("%s on %s: %s %s", self.check, self.subject, cert.kind, cert.note)

    def review(self, cert: Certificate) -> None:
        if len(self._reviews) < CERT_LIMIT:
            self._reviews.append(cert)
        logging.warning("%s on %s flagged for review: %s", self.check, self.subject, cert.note)

    def witness(self, cert: Certificate) -> None:
        if len(self._witnesses) < CERT_LIMIT:
            self._witnesses.append(cert)

    def report(self) -> VerdictReport:
        vacuous = self.vacuous
        if self.cases == 0 and vacuous == 0:
            vacuous = 1
        stats: Dict[str, Any] = {"cases": self.cases, "vacuous": vacuous, "mode": self.mode, "failures": self.failures}
        if self.seed is not None:
            stats["seed"] = self.seed
        stats.update(self.extra)
        return VerdictReport(
            subject=self.subject,
            check=self.check,
            passed=self.failures == 0,
            certificates=tuple(self._failed + self._reviews + self._witnesses),
            stats=stats,
        )


def contraction_bad_set(M: Matroid) -> ElementSet:
    """Elements h with si(M/h) not 3-connected."""
    return M.memo(
        "contraction-bad",
        lambda: mask_of(e for e in range(M.size) if not si_contraction_is_3connected(M, e)),
    )


def property_hyperplanes(M: Matroid) -> List[ElementSet]:
    """Hyperplanes all of whose elements h leave si(M/h) without 3-connectivity."""
    require_3connected(M)
    bad = contraction_bad_set(M)
    return [H for H in hyperplanes(M) if H & ~bad == 0]


def check_main_theorem(M: Matroid, subject: str = "M", *, settings: SweepSettings = SweepSettings()) -> VerdictReport:
    require_3connected(M)
    tally = Tally(subject, MAIN_THEOREM)
    found = property_hyperplanes(M)
    tally.held(len(hyperplanes(M)))
    witness = is_in_P_star(M, seed=settings.seed)
    witness_kind = "family-witness"
    if witness is None:
        witness = is_boundary_member(M, seed=settings.seed)
        witness_kind = "family-boundary"
    tally.extra["property_hyperplanes"] = len(found)
    if witness is not None:
        tally.extra["family_n"] = witness.n
    ground = M.ground

    if found and witness is None:
        H = found[0]
        tally.fail(
            cite(
                M,
                "offending-hyperplane",
                sets={"H": H, "C": ground & ~H},
                ranks=("H",),
                note=f"{len(found)} property hyperplanes but no family witness",
            )
        )
    elif witness is not None and witness.hyperplane not in found:
        H = witness.hyperplane
        tally.fail(
            cite(
                M,
                "missing-hyperplane",
                sets={"H": H, "C": ground & ~H},
                ranks=("H",),
                extra={"n": witness.n},
                note="image of the K3,n edges is not a property hyperplane",
            )
        )
    elif witness is not None:
        H = witness.hyperplane
        note = "M*(K~3,2) lies below the family bound n >= 3" if witness_kind == "family-boundary" else ""
        tally.witness(
            cite(M, witness_kind, sets={"H": H, "C": ground & ~H}, ranks=("H",), extra={"n": witness.n}, note=note)
        )
    logging.info("%s %s: %d property hyperplanes", MAIN_THEOREM, subject, len(found))
    return tally.report()


def _first_good(M: Matroid, side: ElementSet) -> Optional[int]:
    for y in iter_ids(side):
        if si_contraction_is_3connected(M, y):
            return y
    return None


def vertical_theorem_tally(M: Matroid, tally: Tally) -> None:
    one_sided = 0
    for z in range(M.size):
        for p in vertical_partitions_at(M, z):
            y1, y2 = _first_good(M, p.X1), _first_good(M, p.X2)
            sets = {"X1": p.X1, "X2": p.X2}
            if y1 is not None and y2 is not None:
                tally.held()
                tally.witness(
                    cite(M, "witness", sets=sets, elements={"x": p.x, "y1": y1, "y2": y2}, lambdas=("X1", "X2"))
                )
            elif y1 is not None or y2 is not None:
                # Only one side has a witness: the weak reading holds, the strong one does not.
                tally.held()
                one_sided += 1
                side = "X1" if y1 is not None else "X2"
                tally.review(
                    cite(
                        M,
                        "review",
                        sets=sets,
                        elements={"x": p.x, "y": y1 if y1 is not None else y2},
                        lambdas=("X1", "X2"),
                        note=f"contraction witness only in {side}",
                    )
                )
            else:
                tally.held()
                tally.fail(
                    cite(
                        M,
                        "no-witness",
                        sets=sets,
                        elements={"x": p.x},
                        ranks=("X1", "X2"),
                        lambdas=("X1", "X2"),
                        note="no element of either side has si(M/y) 3-connected",
                    )
                )
    # Partitions that only meet the one-sided reading; they pass but carry a review certificate.
    tally.extra["one_sided"] = one_sided


def check_vertical_theorem(M: Matroid, subject: str = "M") -> VerdictReport:
    require_3connected(M)
    tally = Tally(subject, VERTICAL_THEOREM)
    vertical_theorem_tally(M, tally)
    logging.info("%s %s: %d vertical partitions", VERTICAL_THEOREM, subject, tally.cases)
    return tally.report()
