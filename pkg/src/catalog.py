from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Tuple

import networkx as nx

from .elements import mask_of
from .families import family_member
from .graph import Multigraph, complete_bipartite, complete_graph, from_networkx
from .matroid import Matroid, bases, bond_matroid, cycle_matroid, from_bases, uniform

FANO_LINES = ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))

# K4 edge ids with vertex 3 as the hub; the rim is edges 01, 02, 12.
K4_RIM = (0, 1, 3)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matroid: Matroid
    provenance: str


def fano() -> Matroid:
    lines = {mask_of(line) for line in FANO_LINES}
    triples = [mask_of((a, b, c)) for a in range(7) for b in range(a + 1, 7) for c in range(b + 1, 7)]
    return from_bases(7, [t for t in triples if t not in lines])


def whirl3() -> Matroid:
    k4 = cycle_matroid(complete_graph(4))
    return from_bases(6, bases(k4) + [mask_of(K4_RIM)])


def _complement_bases(M: Matroid) -> Matroid:
    return from_bases(M.size, [M.ground ^ b for b in bases(M)])


def named_matroids() -> List[CatalogEntry]:
    f7 = fano()
    k5 = complete_graph(5)
    k33 = complete_bipartite(3, 3)
    items = [
        ("U(2,4)", uniform(2, 4)),
        ("U(2,5)", uniform(2, 5)),
        ("U(3,5)", uniform(3, 5)),
        ("U(3,6)", uniform(3, 6)),
        ("M(K4)", cycle_matroid(complete_graph(4))),
        ("W3", whirl3()),
        ("F7", f7),
        ("F7*", _complement_bases(f7)),
        ("M(K5)", cycle_matroid(k5)),
        ("M*(K5)", bond_matroid(k5)),
        ("M(K3,3)", cycle_matroid(k33)),
        ("M*(K3,3)", bond_matroid(k33)),
    ]
    return [CatalogEntry(name, M, "named") for name, M in items]


def _atlas_3connected(max_vertices: int) -> List[Tuple[int, Multigraph]]:
    if not 4 <= max_vertices <= 7:
        raise ValueError("graph enumeration covers 4..7 vertices")
    out = []
    for index, g in enumerate(nx.graph_atlas_g()):
        n = g.number_of_nodes()
        if n < 4 or n > max_vertices:
            continue
        if min(dict(g.degree()).values()) < 3:
            continue
        if nx.node_connectivity(g) >= 3:
            out.append((index, from_networkx(g)))
    logging.info("Found %d 3-connected graphs on at most %d vertices", len(out), max_vertices)
    return out


def enumerate_3connected_graphs(max_vertices: int) -> List[Multigraph]:
    """All simple 3-connected graphs on 4..max_vertices vertices, one per isomorphism class."""
    return [g for _, g in _atlas_3connected(max_vertices)]


def graphic_entries(max_vertices: int) -> List[CatalogEntry]:
    out = []
    for index, g in _atlas_3connected(max_vertices):
        out.append(CatalogEntry(f"M(g{index})", cycle_matroid(g), f"graphic(g{index})"))
        out.append(CatalogEntry(f"M*(g{index})", bond_matroid(g), f"cographic(g{index})"))
    return out


def uniform_entries(min_elements: int, max_elements: int) -> List[CatalogEntry]:
    out = []
    for m in range(max(min_elements, 4), max_elements + 1):
        for r in range(2, m - 1):
            out.append(CatalogEntry(f"U({r},{m})", uniform(r, m), f"uniform({r},{m})"))
    return out


def family_entries(ns: Iterable[int]) -> List[CatalogEntry]:
    return [CatalogEntry(f"P*({n})", family_member(n), f"family({n})") for n in ns]


def build_catalog(cfg: Dict[str, Any]) -> List[CatalogEntry]:
    c = cfg.get("catalog", {}) or {}
    max_vertices = int(c.get("max_vertices", 6) or 6)
    u_min = int(c.get("uniform_min_elements", 4) or 4)
    u_max = int(c.get("uniform_max_elements", 10) or 10)
    ns = c.get("family_ns")
    family_ns = [3, 4] if ns is None else [int(n) for n in ns]

    entries: List[CatalogEntry] = []
    seen = set()
    # Uniform entries repeat some named ones; the first name wins.
    for entry in named_matroids() + graphic_entries(max_vertices) + uniform_entries(u_min, u_max) + family_entries(family_ns):
        if entry.name in seen:
            continue
        seen.add(entry.name)
        entries.append(entry)
    logging.info("Catalog holds %d entries", len(entries))
    return entries
