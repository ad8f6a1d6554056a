from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, List, Mapping, Sequence

from .errors import ElementOutOfRange

# An element set is a plain int; bit i set means element i is present.
ElementSet = int

MAX_ELEMENTS = 31


def bit(e: int) -> ElementSet:
    return 1 << e


def full_mask(m: int) -> ElementSet:
    return (1 << m) - 1


def mask_of(ids: Iterable[int]) -> ElementSet:
    out = 0
    for e in ids:
        out |= 1 << e
    return out


def size(mask: ElementSet) -> int:
    return mask.bit_count()


def iter_ids(mask: ElementSet) -> Iterator[int]:
    if mask < 0:
        raise ElementOutOfRange(f"negative element set {mask}")
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def ids_of(mask: ElementSet) -> List[int]:
    return list(iter_ids(mask))


def lowest(mask: ElementSet) -> int:
    if not mask:
        raise ValueError("empty element set has no lowest element")
    return (mask & -mask).bit_length() - 1


def contains(mask: ElementSet, e: int) -> bool:
    return bool(mask >> e & 1)


def is_subset(a: ElementSet, b: ElementSet) -> bool:
    return a & ~b == 0


def check_mask(mask: ElementSet, m: int) -> ElementSet:
    if mask < 0:
        raise ElementOutOfRange(f"negative element set {mask}")
    if mask >> m:
        raise ElementOutOfRange(f"element set {format_set(mask)} leaves ground set of size {m}")
    return mask


def submasks(mask: ElementSet) -> Iterator[ElementSet]:
    """All subsets of `mask`, the empty set last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def subsets_of_size(mask: ElementSet, k: int) -> Iterator[ElementSet]:
    for combo in combinations(ids_of(mask), k):
        yield mask_of(combo)


def relabel(mask: ElementSet, mapping: Mapping[int, int] | Sequence[int]) -> ElementSet:
    out = 0
    for e in iter_ids(mask):
        out |= 1 << mapping[e]
    return out


def format_set(mask: ElementSet) -> str:
    return "{" + ",".join(str(e) for e in iter_ids(mask)) + "}"
