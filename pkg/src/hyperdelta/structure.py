"""Combinatorial invariants: vertex distances, girth, cycles, circumference, blocks."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np

from .errors import BudgetExceeded
from .graph import Edge, MetricGraph, induced_on_edges
from .lengths import QuarterLength

DEFAULT_CYCLE_BUDGET = 10**7


@dataclass(frozen=True)
class Cycle:
    """A simple cycle given by its vertex sequence (first vertex not repeated)."""

    vertices: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3 or len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"not a simple cycle: {self.vertices}")

    @property
    def length(self) -> QuarterLength:
        return QuarterLength(4 * len(self.vertices))

    @property
    def edges(self) -> Tuple[Edge, ...]:
        vs = self.vertices
        return tuple(
            (min(a, b), max(a, b)) for a, b in zip(vs, vs[1:] + vs[:1])
        )


@lru_cache(maxsize=256)
def vertex_distances(graph: MetricGraph) -> np.ndarray:
    """All-pairs hop distances between vertices (int matrix)."""
    n = graph.n
    adj = graph.adjacency
    dist = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        dq = deque([s])
        while dq:
            u = dq.popleft()
            du = row[u] + 1
            for w in adj[u]:
                if row[w] < 0:
                    row[w] = du
                    dq.append(w)
    dist.setflags(write=False)
    return dist


def girth_edges(graph: MetricGraph) -> Optional[int]:
    """Length of a shortest cycle in edges, ``None`` for a tree.

    One BFS per root; a non-tree edge ``(u, w)`` closes a closed walk of length
    ``d(u) + d(w) + 1`` through the root, and the minimum over all roots is the
    girth.
    """
    if graph.is_tree():
        return None
    adj = graph.adjacency
    best = None
    for root in range(graph.n):
        depth = {root: 0}
        parent = {root: -1}
        dq = deque([root])
        while dq:
            u = dq.popleft()
            if best is not None and 2 * depth[u] >= best:
                break
            for w in adj[u]:
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    dq.append(w)
                elif parent[u] != w:
                    cand = depth[u] + depth[w] + 1
                    if best is None or cand < best:
                        best = cand
        if best == 3:
            break
    return best


def girth(graph: MetricGraph) -> Optional[QuarterLength]:
    g = girth_edges(graph)
    return None if g is None else QuarterLength(4 * g)


# -- biconnected decomposition ------------------------------------------------------

@dataclass(frozen=True)
class TDecomposition:
    """Blocks of a graph: maximal biconnected subgraphs, bridges as single edges."""

    components: Tuple[Tuple[Edge, ...], ...]
    cut_vertices: Tuple[int, ...]
    effective_diameters: Tuple[QuarterLength, ...] = ()

    @property
    def vertex_sets(self) -> Tuple[frozenset, ...]:
        return tuple(frozenset(v for e in comp for v in e) for comp in self.components)

    def component_graph(self, i: int) -> Tuple[MetricGraph, Tuple[int, ...]]:
        """Block ``i`` as a standalone graph plus its local-to-original vertex map."""
        return induced_on_edges(self.components[i])

    def __len__(self) -> int:
        return len(self.components)


def _blocks(graph: MetricGraph) -> Tuple[List[List[Edge]], List[int]]:
    """Iterative Hopcroft-Tarjan with an edge stack."""
    n = graph.n
    adj = graph.adjacency
    disc = [-1] * n
    low = [0] * n
    blocks: List[List[Edge]] = []
    cuts = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        estack: List[Edge] = []
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    estack.append((u, w))
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    estack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                block = []
                while True:
                    e = estack.pop()
                    block.append((min(e), max(e)))
                    if e == (parent, u):
                        break
                blocks.append(block)
                if disc[parent] == disc[root]:
                    root_children += 1
                else:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return blocks, sorted(cuts)


@lru_cache(maxsize=256)
def t_decomposition(graph: MetricGraph) -> TDecomposition:
    """Biconnected decomposition, blocks ordered by their smallest edge.

    Effective diameters are the metric diameters of each block (in quarters).
    """
    from .metric import grid_metric  # metric depends on this module

    blocks, cuts = _blocks(graph)
    comps = tuple(sorted(tuple(sorted(b)) for b in blocks))
    gm = grid_metric(graph, 4)
    diams = tuple(QuarterLength(gm.diameter_on_edges(comp)) for comp in comps)
    return TDecomposition(comps, tuple(cuts), diams)


# -- exhaustive cycle search -------------------------------------------------------

class _Search:
    def __init__(self, graph: MetricGraph, budget: int):
        self.adj = graph.adjacency
        self.budget = budget
        self.expansions = 0

    def tick(self) -> None:
        self.expansions += 1
        if self.expansions > self.budget:
            raise BudgetExceeded(
                f"cycle search exceeded {self.budget} node expansions"
            )


def _longest_in_block(search: _Search, verts: List[int], best: List[int]) -> Optional[List[int]]:
    adj = search.adj
    target = len(verts)
    found = None
    for idx, s in enumerate(verts):
        allowed = set(verts[idx + 1:])
        if len(allowed) + 1 <= max(best[0], 2):
            break
        path = [s]
        on_path = {s}

        def dfs(u: int) -> bool:
            nonlocal found
            search.tick()
            L = len(path)
            for w in adj[u]:
                if w == s and L >= 3 and L > best[0]:
                    best[0] = L
                    found = list(path)
                    if L == target:
                        return True
                elif w in allowed and w not in on_path:
                    remaining = len(allowed) - (len(on_path) - 1)
                    if L + remaining <= best[0]:
                        return False
                    path.append(w)
                    on_path.add(w)
                    if dfs(w):
                        return True
                    path.pop()
                    on_path.discard(w)
            return False

        if dfs(s):
            break
    return found


def _blocks_with_cycles(graph: MetricGraph) -> List[List[int]]:
    out = []
    for comp in t_decomposition(graph).components:
        if len(comp) >= 3:
            out.append(sorted({v for e in comp for v in e}))
    return out


def longest_cycle(graph: MetricGraph, budget: int = DEFAULT_CYCLE_BUDGET) -> Optional[Cycle]:
    """A longest simple cycle, by exhaustive pruned DFS inside each block.

    Raises BudgetExceeded when more than ``budget`` node expansions are needed.
    """
    search = _Search(graph, budget)
    best = [0]
    found = None
    for verts in _blocks_with_cycles(graph):
        if len(verts) <= best[0]:
            continue
        cyc = _longest_in_block(search, verts, best)
        if cyc is not None:
            found = cyc
    return None if found is None else Cycle(tuple(found))


def circumference(graph: MetricGraph, budget: int = DEFAULT_CYCLE_BUDGET) -> Optional[QuarterLength]:
    cyc = longest_cycle(graph, budget)
    return None if cyc is None else cyc.length


def circumference_edges(graph: MetricGraph, budget: int = DEFAULT_CYCLE_BUDGET) -> Optional[int]:
    cyc = longest_cycle(graph, budget)
    return None if cyc is None else len(cyc.vertices)


def shortest_cycle_at_least(
    graph: MetricGraph, min_length: int, budget: int = DEFAULT_CYCLE_BUDGET
) -> Optional[Cycle]:
    """A shortest simple cycle with at least ``min_length`` edges, if any exists."""
    search = _Search(graph, budget)
    adj = search.adj
    floor = max(3, min_length)
    best: List[Optional[int]] = [None]
    found: List[Optional[List[int]]] = [None]
    for verts in _blocks_with_cycles(graph):
        if len(verts) < floor:
            continue
        for idx, s in enumerate(verts):
            allowed = set(verts[idx + 1:])
            path = [s]
            on_path = {s}

            def dfs(u: int) -> bool:
                search.tick()
                L = len(path)
                for w in adj[u]:
                    if w == s and L >= floor and (best[0] is None or L < best[0]):
                        best[0] = L
                        found[0] = list(path)
                        if L == floor:
                            return True
                    elif w in allowed and w not in on_path:
                        if best[0] is not None and L + 1 >= best[0]:
                            continue
                        path.append(w)
                        on_path.add(w)
                        if dfs(w):
                            return True
                        path.pop()
                        on_path.discard(w)
                return False

            if dfs(s):
                return Cycle(tuple(found[0]))
    return None if found[0] is None else Cycle(tuple(found[0]))


def cycle_lengths(graph: MetricGraph, budget: int = DEFAULT_CYCLE_BUDGET) -> Dict[int, int]:
    """Histogram ``{length: count}`` of all simple cycles (brute force, small graphs)."""
    search = _Search(graph, budget)
    adj = search.adj
    hist: Dict[int, int] = {}
    for s in range(graph.n):
        path = [s]
        on_path = {s}

        def dfs(u: int) -> None:
            search.tick()
            for w in adj[u]:
                if w == s and len(path) >= 3:
                    hist[len(path)] = hist.get(len(path), 0) + 1
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    dfs(w)
                    path.pop()
                    on_path.discard(w)

        dfs(s)
    # every cycle was traversed in both directions
    return {k: v // 2 for k, v in sorted(hist.items())}
