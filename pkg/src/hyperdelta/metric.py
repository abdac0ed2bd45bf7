"""Exact metric of a unit-edge graph sampled on a regular grid of its points.

With ``scale = s`` every edge carries the points at offsets ``1/s .. (s-1)/s``
from its low endpoint, and all distances are integers in ``1/s`` units.  The
default ``s = 4`` is the quarter grid; every even ``s`` contains J(G), the
vertices together with the edge midpoints.

Grid node ids: vertices keep ``0 .. n-1``; the point at offset ``t`` on edge
``i`` is ``n + i*(s-1) + t - 1``.  This matches the vertex numbering of
``subdivide(graph, s)``, so the table equals BFS on the subdivided graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .graph import Edge, MetricGraph
from .lengths import QuarterLength
from .structure import t_decomposition, vertex_distances


@dataclass(frozen=True)
class GraphPoint:
    """A grid point: a vertex, or an interior point of an edge.

    ``offset`` is measured from the edge's low endpoint in ``1/scale`` units and
    lies strictly between 0 and ``scale``; endpoints are always stored as vertices.
    """

    vertex: Optional[int] = None
    edge: Optional[int] = None
    offset: int = 0
    scale: int = 4

    def __post_init__(self) -> None:
        if (self.vertex is None) == (self.edge is None):
            raise ValueError("a point is either a vertex or on an edge")
        if self.edge is not None and not 0 < self.offset < self.scale:
            raise ValueError("edge offsets lie strictly inside the edge; use a vertex point")

    @classmethod
    def at_vertex(cls, v: int, scale: int = 4) -> "GraphPoint":
        return cls(vertex=v, scale=scale)

    @classmethod
    def on_edge(cls, graph: MetricGraph, edge: int, offset: int, scale: int = 4) -> "GraphPoint":
        """Canonical point at ``offset/scale`` from the low endpoint of ``edge``."""
        u, v = graph.edges[edge]
        if offset == 0:
            return cls(vertex=u, scale=scale)
        if offset == scale:
            return cls(vertex=v, scale=scale)
        return cls(edge=edge, offset=offset, scale=scale)

    @classmethod
    def midpoint(cls, graph: MetricGraph, u: int, v: int, scale: int = 4) -> "GraphPoint":
        return cls.on_edge(graph, graph.edge_id(u, v), scale // 2, scale)

    @property
    def is_vertex(self) -> bool:
        return self.vertex is not None

    @property
    def in_j(self) -> bool:
        """True for vertices and edge midpoints (the half grid)."""
        return self.vertex is not None or 2 * self.offset == self.scale

    def __str__(self) -> str:
        if self.vertex is not None:
            return f"v{self.vertex}"
        return f"e{self.edge}+{self.offset}/{self.scale}"


class GridMetric:
    """Distance table over all grid points of ``graph`` at resolution ``1/scale``."""

    def __init__(self, graph: MetricGraph, scale: int = 4):
        if scale < 2 or scale % 2:
            raise ValueError(f"grid scale must be even and >= 2, got {scale}")
        self.graph = graph
        self.scale = scale
        n, m, k = graph.n, graph.m, scale - 1
        self.size = n + k * m

        end_a = np.empty(self.size, dtype=np.int64)
        end_b = np.empty(self.size, dtype=np.int64)
        off_a = np.zeros(self.size, dtype=np.int64)
        off_b = np.zeros(self.size, dtype=np.int64)
        edge_of = np.full(self.size, -1, dtype=np.int64)
        end_a[:n] = end_b[:n] = np.arange(n)
        for i, (u, v) in enumerate(graph.edges):
            sl = slice(n + i * k, n + (i + 1) * k)
            t = np.arange(1, scale)
            end_a[sl], end_b[sl] = u, v
            off_a[sl], off_b[sl] = t, scale - t
            edge_of[sl] = i
        self.edge_of = edge_of
        self.offset_of = off_a

        D = vertex_distances(graph) * scale
        dist = None
        for ep, op in ((end_a, off_a), (end_b, off_b)):
            for eq, oq in ((end_a, off_a), (end_b, off_b)):
                cand = op[:, None] + D[np.ix_(ep, eq)] + oq[None, :]
                dist = cand if dist is None else np.minimum(dist, cand)
        same = (edge_of[:, None] == edge_of[None, :]) & (edge_of[:, None] >= 0)
        direct = np.abs(off_a[:, None] - off_a[None, :])
        dist = np.where(same, np.minimum(dist, direct), dist)
        dist.setflags(write=False)
        self.dist = dist

    # -- points ---------------------------------------------------------------------

    def node_id(self, point: GraphPoint) -> int:
        if point.vertex is not None:
            return point.vertex
        if point.scale != self.scale:
            ratio, rem = divmod(self.scale * point.offset, point.scale)
            if rem:
                raise ValueError(f"{point} is not on the 1/{self.scale} grid")
            return self.graph.n + point.edge * (self.scale - 1) + ratio - 1
        return self.graph.n + point.edge * (self.scale - 1) + point.offset - 1

    def point(self, node: int) -> GraphPoint:
        node = int(node)
        if node < self.graph.n:
            return GraphPoint.at_vertex(node, self.scale)
        return GraphPoint(edge=int(self.edge_of[node]), offset=int(self.offset_of[node]), scale=self.scale)

    def points(self) -> List[GraphPoint]:
        return [self.point(i) for i in range(self.size)]

    def distance_units(self, p: GraphPoint, q: GraphPoint) -> int:
        return int(self.dist[self.node_id(p), self.node_id(q)])

    def distance(self, p: GraphPoint, q: GraphPoint) -> QuarterLength:
        return QuarterLength.from_units(self.distance_units(p, q), self.scale)

    def edge_nodes(self, edge: int) -> List[int]:
        """Grid nodes of a closed edge, from low endpoint to high endpoint."""
        u, v = self.graph.edges[edge]
        base = self.graph.n + edge * (self.scale - 1)
        return [u] + list(range(base, base + self.scale - 1)) + [v]

    # -- the half grid J(G) ------------------------------------------------------------

    @cached_property
    def j_nodes(self) -> np.ndarray:
        """Grid ids of J(G): vertices in order, then edge midpoints in edge order."""
        n, half = self.graph.n, self.scale // 2
        mids = [self.graph.n + i * (self.scale - 1) + half - 1 for i in range(self.graph.m)]
        return np.array(list(range(n)) + mids, dtype=np.int64)

    @cached_property
    def j_neighbours(self) -> Tuple[Tuple[Tuple[int, Tuple[int, ...]], ...], ...]:
        """Adjacency of the half-subdivided graph over J indices.

        Entry ``a`` lists ``(b, interior)`` where ``interior`` are the grid nodes
        strictly between J points ``a`` and ``b``, ordered from ``a`` to ``b``.
        """
        n, half = self.graph.n, self.scale // 2
        nbrs: List[List[Tuple[int, Tuple[int, ...]]]] = [[] for _ in range(n + self.graph.m)]
        for i, (u, v) in enumerate(self.graph.edges):
            nodes = self.edge_nodes(i)
            mid = n + i
            low_half = tuple(nodes[1:half])
            high_half = tuple(nodes[half + 1:-1])
            nbrs[u].append((mid, low_half))
            nbrs[mid].append((u, low_half[::-1]))
            nbrs[mid].append((v, high_half))
            nbrs[v].append((mid, high_half[::-1]))
        return tuple(tuple(sorted(x)) for x in nbrs)

    def j_index_of(self, point: GraphPoint) -> int:
        if point.vertex is not None:
            return point.vertex
        if not point.in_j:
            raise ValueError(f"{point} is not a vertex or an edge midpoint")
        return self.graph.n + point.edge

    def j_point(self, j: int) -> GraphPoint:
        return self.point(int(self.j_nodes[j]))

    # -- diameters ---------------------------------------------------------------------

    def diameter(self) -> int:
        return int(self.dist.max())

    def diameter_on_edges(self, edges: Iterable[Edge]) -> int:
        nodes = set()
        for e in edges:
            nodes.update(self.edge_nodes(self.graph.edge_id(*e)))
        if not nodes:
            return 0
        idx = np.array(sorted(nodes))
        return int(self.dist[np.ix_(idx, idx)].max())


@lru_cache(maxsize=256)
def grid_metric(graph: MetricGraph, scale: int = 4) -> GridMetric:
    return GridMetric(graph, scale)


def quarter_distances(graph: MetricGraph) -> GridMetric:
    """Distance table over every quarter-grid point of ``graph``."""
    return grid_metric(graph, 4)


@dataclass(frozen=True)
class DiameterReport:
    diam_vertices: QuarterLength
    diam_metric: QuarterLength
    diam_effective: QuarterLength
    vertex_edge_within_one: bool

    def __str__(self) -> str:
        return (
            f"diam_vertices={self.diam_vertices} diam_metric={self.diam_metric} "
            f"diam_effective={self.diam_effective}"
        )


def vertex_edge_within_one(graph: MetricGraph) -> bool:
    """True iff ``d(v, e) <= 1`` for every vertex ``v`` and edge ``e``.

    Computed from vertex distances only: the closed edge ``[a, b]`` is at
    distance ``min(d(v, a), d(v, b))`` from ``v``.
    """
    D = vertex_distances(graph)
    if graph.m == 0:
        return True
    a = np.array([e[0] for e in graph.edges])
    b = np.array([e[1] for e in graph.edges])
    return bool((np.minimum(D[:, a], D[:, b]) <= 1).all())


def diameters(graph: MetricGraph) -> DiameterReport:
    gm = quarter_distances(graph)
    dv = int(vertex_distances(graph).max()) * 4
    td = t_decomposition(graph)
    eff = max((d.quarters for d in td.effective_diameters), default=0)
    return DiameterReport(
        QuarterLength(dv),
        QuarterLength(gm.diameter()),
        QuarterLength(eff),
        vertex_edge_within_one(graph),
    )
