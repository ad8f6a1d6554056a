from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from .elements import ElementSet, bit, iter_ids, mask_of
from .errors import ElementOutOfRange


class UnionFind:
    """Array-backed disjoint sets over vertices 0..n-1."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, k: int) -> int:
        parent = self.parent
        root = k
        while parent[root] != root:
            root = parent[root]
        while parent[k] != root:
            parent[k], k = root, parent[k]
        return root

    def union(self, a: int, b: int) -> bool:
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ElementOutOfRange(f"edge {i} ({u},{v}) leaves vertex range 0..{self.vertex_count - 1}")

    @property
    def size(self) -> int:
        return len(self.edges)

    def rank(self, mask: ElementSet) -> int:
        # Forest size of the edge subset: every union that merges two trees counts.
        uf = UnionFind(self.vertex_count)
        r = 0
        for e in iter_ids(mask):
            u, v = self.edges[e]
            if uf.union(u, v):
                r += 1
        return r

    def delete_edges(self, mask: ElementSet) -> Tuple["Multigraph", Dict[int, int]]:
        kept = [e for e in range(self.size) if not mask >> e & 1]
        id_map = {old: new for new, old in enumerate(kept)}
        return Multigraph(self.vertex_count, tuple(self.edges[e] for e in kept)), id_map

    def contract_edges(self, mask: ElementSet) -> Tuple["Multigraph", Dict[int, int]]:
        uf = UnionFind(self.vertex_count)
        for e in iter_ids(mask):
            uf.union(*self.edges[e])
        renumber: Dict[int, int] = {}
        for v in range(self.vertex_count):
            renumber.setdefault(uf.find(v), len(renumber))
        kept = [e for e in range(self.size) if not mask >> e & 1]
        id_map = {old: new for new, old in enumerate(kept)}
        edges = tuple((renumber[uf.find(self.edges[e][0])], renumber[uf.find(self.edges[e][1])]) for e in kept)
        return Multigraph(len(renumber), edges), id_map

    def relabel_edges(self, order: Sequence[int]) -> "Multigraph":
        """Graph whose edge i is this graph's edge order[i]."""
        return Multigraph(self.vertex_count, tuple(self.edges[e] for e in order))

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.vertex_count))
        for e, (u, v) in enumerate(self.edges):
            g.add_edge(u, v, key=e)
        return g

    def simple_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from((u, v) for u, v in self.edges if u != v)
        return g


def from_networkx(g: nx.Graph) -> Multigraph:
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    edges = sorted(tuple(sorted((index[u], index[v]))) for u, v in g.edges())
    return Multigraph(len(nodes), tuple(edges))


def complete_graph(n: int) -> Multigraph:
    return from_networkx(nx.complete_graph(n))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return from_networkx(nx.complete_bipartite_graph(a, b))


def cycle_graph(n: int) -> Multigraph:
    return from_networkx(nx.cycle_graph(n))


def vertex_connectivity(g: Multigraph) -> int:
    simple = g.simple_graph()
    if simple.number_of_nodes() < 2:
        return 0
    return int(nx.node_connectivity(simple))


def _parallel_index(g: Multigraph) -> Dict[Tuple[int, int], List[int]]:
    by_pair: Dict[Tuple[int, int], List[int]] = {}
    for e, (u, v) in enumerate(g.edges):
        by_pair.setdefault((min(u, v), max(u, v)), []).append(e)
    return by_pair


def cycles(g: Multigraph) -> List[ElementSet]:
    """Edge sets of all cycles (the circuits of the cycle matroid), sorted by mask."""
    by_pair = _parallel_index(g)
    found = set()
    for (u, v), es in by_pair.items():
        if u == v:
            found.update(bit(e) for e in es)
            continue
        for i in range(len(es)):
            for j in range(i + 1, len(es)):
                found.add(bit(es[i]) | bit(es[j]))
    for nodes in nx.simple_cycles(g.simple_graph()):
        if len(nodes) < 3:
            continue
        hops = [by_pair[(min(a, b), max(a, b))] for a, b in zip(nodes, nodes[1:] + nodes[:1])]
        for choice in product(*hops):
            found.add(mask_of(choice))
    return sorted(found)


def bonds(g: Multigraph) -> List[ElementSet]:
    """Minimal edge cuts (the cocircuits of the cycle matroid), sorted by mask."""
    nxg = g.simple_graph()
    found = set()
    for comp in nx.connected_components(nxg):
        comp_nodes = sorted(comp)
        if len(comp_nodes) < 2:
            continue
        anchor, rest = comp_nodes[0], comp_nodes[1:]
        for pick in range(1 << len(rest)):
            side = {anchor} | {rest[i] for i in range(len(rest)) if pick >> i & 1}
            other = set(comp_nodes) - side
            if not other:
                continue
            if not nx.is_connected(nxg.subgraph(side)) or not nx.is_connected(nxg.subgraph(other)):
                continue
            cut = 0
            for e, (u, v) in enumerate(g.edges):
                if (u in side) != (v in side):
                    cut |= bit(e)
            found.add(cut)
    return sorted(found)
