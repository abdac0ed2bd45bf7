"""Exhaustive enumeration of small connected graphs up to isomorphism.

Canonical form: the lexicographically smallest upper-triangle adjacency
bitstring over the leaves of an individualization-refinement search tree.
Refinement is isomorphism invariant, so the leaf set of isomorphic graphs
coincides and the minimum is a canonical certificate; it is the minimum over
all permutations that respect the equitable partition, not over all n!
permutations, which keeps n = 7..9 cheap.  Swapping two twins (vertices with
the same neighbourhood apart from each other) is an automorphism, so only one
twin per class is individualized.

Generation is level by level in the edge count: every connected graph with
``m + 1`` edges is a connected graph with ``m`` edges plus one edge (drop any
edge outside a spanning tree), and the level ``n - 1`` graphs are the trees.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import CapExceeded
from .graph import MetricGraph, build_graph
from .structure import circumference_edges, girth_edges

MAX_VERTICES = 7
MAX_EDGES = 9
MAX_LABELED_VERTICES = 6

Partition = List[List[int]]


def _refine(adj: Sequence[frozenset], cells: Partition) -> Partition:
    """Coarsest equitable refinement, splitting cells by neighbour counts per cell."""
    while True:
        index = {}
        for i, cell in enumerate(cells):
            for v in cell:
                index[v] = i
        out: Partition = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[index[w]] += 1
                sig[v] = tuple(counts)
            groups: Dict[tuple, List[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) > 1:
                split = True
            out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not split:
            return cells


def _certificate(adj: Sequence[frozenset], order: Sequence[int]) -> int:
    n = len(order)
    bits = 0
    for i in range(n):
        ai = adj[order[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | (1 if order[j] in ai else 0)
    return bits


def _search(adj, cells: Partition, best: List) -> None:
    if all(len(c) == 1 for c in cells):
        order = [c[0] for c in cells]
        cert = _certificate(adj, order)
        if best[0] is None or cert < best[0]:
            best[0], best[1] = cert, order
        return
    target = next(i for i, c in enumerate(cells) if len(c) > 1)
    seen_twins = []
    for v in cells[target]:
        if any(adj[v] - {u} == adj[u] - {v} for u in seen_twins):
            continue
        seen_twins.append(v)
        rest = [w for w in cells[target] if w != v]
        new_cells = cells[:target] + [[v], rest] + cells[target + 1:]
        _search(adj, _refine(adj, new_cells), best)


def canonical_labeling(graph: MetricGraph) -> Tuple[int, List[int]]:
    """Certificate (an int) and the vertex order realizing it."""
    adj = [frozenset(a) for a in graph.adjacency]
    by_degree: Dict[int, List[int]] = {}
    for v in range(graph.n):
        by_degree.setdefault(len(adj[v]), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    best: List = [None, None]
    _search(adj, _refine(adj, cells), best)
    return best[0], best[1]


def canonical_key(graph: MetricGraph) -> Tuple[int, int, int]:
    """``(n, m, certificate)``; equal exactly for isomorphic graphs."""
    cert, _ = canonical_labeling(graph)
    return graph.n, graph.m, cert


def canonical_form(graph: MetricGraph) -> MetricGraph:
    """Relabel ``graph`` so that isomorphic inputs give identical outputs."""
    _, order = canonical_labeling(graph)
    pos = {v: i for i, v in enumerate(order)}
    return build_graph(graph.n, [(pos[u], pos[v]) for u, v in graph.edges])


def are_isomorphic(g1: MetricGraph, g2: MetricGraph) -> bool:
    return canonical_key(g1) == canonical_key(g2)


# -- generation ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _trees(n: int) -> Tuple[MetricGraph, ...]:
    if n == 1:
        return (build_graph(1, []),)
    seen = {}
    for t in _trees(n - 1):
        for v in range(n - 1):
            g = canonical_form(build_graph(n, list(t.edges) + [(v, n - 1)]))
            seen.setdefault(canonical_key(g), g)
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def _level(n: int, m: int) -> Tuple[MetricGraph, ...]:
    """All connected graphs with ``n`` vertices and ``m`` edges, canonical and sorted."""
    if m < n - 1 or m > n * (n - 1) // 2:
        return ()
    if m == n - 1:
        return _trees(n)
    seen = {}
    for g in _level(n, m - 1):
        present = set(g.edges)
        for e in combinations(range(n), 2):
            if e not in present:
                h = canonical_form(build_graph(n, list(g.edges) + [e]))
                seen.setdefault(canonical_key(h), h)
    return tuple(seen[k] for k in sorted(seen))


def _labeled(n: int, m_lo: int, m_hi: int) -> Iterator[MetricGraph]:
    """Every connected labelled graph on ``n`` vertices, by edge bitmask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        k = bin(mask).count("1")
        if not m_lo <= k <= m_hi:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        try:
            yield build_graph(n, edges)
        except ValueError:
            continue


@dataclass(frozen=True)
class EnumerationQuery:
    """Which graphs to enumerate.

    Give a vertex count (exact or maximum) and/or an edge count (exact or
    maximum).  ``girth`` and ``circumference`` filter in edges; pass 0 to ask
    for trees.  ``dedup=False`` yields every labelled graph instead (small n
    only).  Caps: 7 vertices, 9 edges, unless ``allow_large``.
    """

    max_vertices: Optional[int] = None
    vertex_count: Optional[int] = None
    max_edges: Optional[int] = None
    edge_count: Optional[int] = None
    girth: Optional[int] = None
    circumference: Optional[int] = None
    dedup: bool = True
    allow_large: bool = False

    def vertex_range(self) -> range:
        if self.vertex_count is not None:
            return range(self.vertex_count, self.vertex_count + 1)
        if self.max_vertices is not None:
            return range(1, self.max_vertices + 1)
        top = self.edge_count if self.edge_count is not None else self.max_edges
        if top is None:
            raise ValueError("give a vertex count or an edge count")
        return range(1, top + 2)

    def edge_range(self, n: int) -> range:
        hi = n * (n - 1) // 2
        if self.edge_count is not None:
            return range(self.edge_count, min(self.edge_count, hi) + 1)
        if self.max_edges is not None:
            hi = min(hi, self.max_edges)
        return range(n - 1, hi + 1)

    def check_caps(self) -> None:
        if self.allow_large:
            return
        verts = self.vertex_count if self.vertex_count is not None else self.max_vertices
        edges = self.edge_count if self.edge_count is not None else self.max_edges
        if verts is not None and verts > MAX_VERTICES:
            raise CapExceeded(f"{verts} vertices exceeds the enumeration cap of {MAX_VERTICES}")
        if edges is not None and edges > MAX_EDGES:
            raise CapExceeded(f"{edges} edges exceeds the enumeration cap of {MAX_EDGES}")
        if not self.dedup and max(self.vertex_range()) > MAX_LABELED_VERTICES:
            raise CapExceeded(f"labelled enumeration is capped at {MAX_LABELED_VERTICES} vertices")

    def accepts(self, graph: MetricGraph) -> bool:
        if self.girth is not None and (girth_edges(graph) or 0) != self.girth:
            return False
        if self.circumference is not None and (circumference_edges(graph) or 0) != self.circumference:
            return False
        return True


def enumerate_graphs(query: EnumerationQuery) -> Iterator[MetricGraph]:
    """Connected simple graphs matching ``query``, ordered by (n, m, certificate)."""
    query.check_caps()
    for n in query.vertex_range():
        if query.girth or query.circumference:
            # a graph with a cycle of length L has at least L vertices
            if n < max(query.girth or 0, query.circumference or 0):
                continue
        for m in query.edge_range(n):
            source = _level(n, m) if query.dedup else _labeled(n, m, m)
            for g in source:
                if query.accepts(g):
                    yield g


def count_graphs(query: EnumerationQuery) -> int:
    return sum(1 for _ in enumerate_graphs(query))
