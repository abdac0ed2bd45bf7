"""Simple connected unit-edge graphs.

Vertices are the integers ``0 .. n-1``.  Edges are stored as sorted pairs
``(u, v)`` with ``u < v`` and the edge tuple itself is sorted, so the index of
an edge (its *edge id*) is stable and reproducible.
"""
from __future__ import annotations

import io
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple, Union

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    EmptyGraphError,
    GraphError,
    InvalidVertexError,
    LoopEdgeError,
)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class MetricGraph:
    """A validated simple connected graph whose edges all have length 1.

    Build instances with :func:`build_graph`; the constructor assumes its
    arguments are already normalized.
    """

    n: int
    edges: Tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_tree(self) -> bool:
        return self.m == self.n - 1

    def __repr__(self) -> str:
        return f"MetricGraph(n={self.n}, m={self.m})"


def _normalize(n: int, edge_list: Iterable[Sequence[int]]) -> Tuple[Edge, ...]:
    seen = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertexError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"edge {e} listed twice")
        seen.add(e)
    return tuple(sorted(seen))


def _is_connected(n: int, edges: Tuple[Edge, ...]) -> bool:
    adj: List[List[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> MetricGraph:
    """Validate and normalize an edge list into a :class:`MetricGraph`.

    Raises EmptyGraphError, LoopEdgeError, DuplicateEdgeError or
    DisconnectedError.  Duplicates are an error, never silently merged.
    """
    if n < 1:
        raise EmptyGraphError("a graph needs at least one vertex")
    edges = _normalize(n, edge_list)
    if not _is_connected(n, edges):
        raise DisconnectedError(f"graph on {n} vertices with {len(edges)} edges is not connected")
    return MetricGraph(n, edges)


def subdivide(graph: MetricGraph, r: int) -> MetricGraph:
    """Replace every edge by a path of ``r`` edges.

    Original vertices keep their ids; the ``r - 1`` new vertices of edge ``i``
    get ids ``n + i*(r-1) .. n + (i+1)*(r-1) - 1``, ordered from the low endpoint.
    """
    if r < 1:
        raise ValueError(f"subdivision factor must be positive, got {r}")
    if r == 1:
        return graph
    edges = []
    nxt = graph.n
    for u, v in graph.edges:
        chain = [u] + list(range(nxt, nxt + r - 1)) + [v]
        nxt += r - 1
        edges.extend(zip(chain, chain[1:]))
    return build_graph(nxt, edges)


def relabel(graph: MetricGraph, mapping: Sequence[int]) -> MetricGraph:
    """Apply a vertex permutation ``v -> mapping[v]``."""
    return build_graph(graph.n, [(mapping[u], mapping[v]) for u, v in graph.edges])


def induced_on_edges(edges: Iterable[Edge]) -> Tuple[MetricGraph, Tuple[int, ...]]:
    """Subgraph spanned by ``edges``, relabelled ``0..k-1`` in increasing vertex order.

    Returns the graph and the tuple mapping new ids to the original ones.
    """
    edges = list(edges)
    verts = sorted({v for e in edges for v in e})
    local = {v: i for i, v in enumerate(verts)}
    return build_graph(len(verts), [(local[u], local[v]) for u, v in edges]), tuple(verts)


# -- canonical edge-list text format -------------------------------------------------

def format_edge_list(graph: MetricGraph, comment: str = "") -> str:
    out = io.StringIO()
    for line in comment.splitlines():
        out.write(f"# {line}\n")
    out.write(f"{graph.n} {graph.m}\n")
    for u, v in graph.edges:
        out.write(f"{u} {v}\n")
    return out.getvalue()


def parse_edge_list(text: str) -> MetricGraph:
    """Parse the ``n m`` header + ``u v`` lines format ('#' starts a comment line)."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise GraphError("missing 'n m' header line")
    (n, m), body = rows[0], rows[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} were given")
    return build_graph(n, body)


PathLike = Union[str, "os.PathLike[str]"]


def read_edge_list(path: PathLike) -> MetricGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(graph: MetricGraph, path: PathLike, comment: str = "") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(graph, comment))
