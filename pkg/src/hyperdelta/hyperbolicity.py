"""Exact hyperbolicity constant of unit-edge graphs.

delta(G) is the maximum of delta(T) over geodesic triangles whose corners lie
in J(G) (vertices and edge midpoints).  :func:`delta_exact` enumerates every
corner triple of J(G), every combination of geodesics for its three sides, and
evaluates each triangle on the 1/4 grid, where all breakpoints of the distance
functions involved lie.  Nothing is approximated: a search that would exceed a
cap raises instead.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import BudgetExceeded, CapExceeded
from .graph import MetricGraph
from .lengths import QuarterLength, ValueInterval
from .metric import GraphPoint, GridMetric, diameters, grid_metric
from .structure import (
    circumference_edges,
    girth_edges,
    shortest_cycle_at_least,
    t_decomposition,
)

DEFAULT_GEODESIC_CAP = 10**5
DEFAULT_TRIPLE_BUDGET = 10**8

# keeps the (n1, n2, n3, L) broadcast of one corner triple below ~64 MB
_MAX_TENSOR = 8 * 10**6


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def default_geodesic_cap() -> int:
    return _env_int("HYPERDELTA_GEODESIC_CAP", DEFAULT_GEODESIC_CAP)


def default_triple_budget() -> int:
    return _env_int("HYPERDELTA_TRIPLE_BUDGET", DEFAULT_TRIPLE_BUDGET)


def default_workers() -> int:
    return _env_int("HYPERDELTA_THREADS", 1)


@dataclass(frozen=True)
class Geodesic:
    """A shortest path between two J(G) points, as its sequence of J(G) points."""

    points: Tuple[GraphPoint, ...]
    length: QuarterLength

    @property
    def start(self) -> GraphPoint:
        return self.points[0]

    @property
    def end(self) -> GraphPoint:
        return self.points[-1]

    def reversed(self) -> "Geodesic":
        return Geodesic(self.points[::-1], self.length)

    def __str__(self) -> str:
        return " - ".join(str(p) for p in self.points)


@dataclass(frozen=True)
class GeodesicTriangle:
    corners: Tuple[GraphPoint, GraphPoint, GraphPoint]
    sides: Tuple[Geodesic, Geodesic, Geodesic]

    def __post_init__(self) -> None:
        x, y, z = self.corners
        for side, (a, b) in zip(self.sides, ((x, y), (y, z), (z, x))):
            if side.start != a or side.end != b:
                raise ValueError(f"side {side} does not join {a} and {b}")

    @property
    def perimeter(self) -> QuarterLength:
        return QuarterLength(sum(s.length.quarters for s in self.sides))


@dataclass(frozen=True)
class DeltaResult:
    value: QuarterLength
    witness_triangle: GeodesicTriangle
    witness_point: GraphPoint
    triangles_examined: int

    def __str__(self) -> str:
        return f"delta = {self.value.describe()}"


class _Engine:
    """Geodesic enumeration and triangle evaluation on one grid."""

    def __init__(self, graph: MetricGraph, scale: int = 4, geodesic_cap: Optional[int] = None):
        if scale % 4:
            raise ValueError(f"triangle evaluation needs a grid scale divisible by 4, got {scale}")
        self.graph = graph
        self.scale = scale
        self.half = scale // 2
        self.cap = default_geodesic_cap() if geodesic_cap is None else geodesic_cap
        self.gm: GridMetric = grid_metric(graph, scale)
        self.jn = self.gm.j_nodes
        self.dj = self.gm.dist[np.ix_(self.jn, self.jn)]
        self.nbrs = self.gm.j_neighbours
        self._cache: Dict[Tuple[int, int], Tuple[List[Tuple[int, ...]], np.ndarray, np.ndarray]] = {}

    # -- geodesics ----------------------------------------------------------------------

    def count_paths(self, a: int, b: int) -> int:
        toward = self.dj[:, b]
        order = np.argsort(toward[: len(self.jn)], kind="stable")
        counts = np.zeros(len(self.jn), dtype=object)
        counts[b] = 1
        for u in order:
            if u == b or toward[u] > toward[a]:
                continue
            counts[u] = sum(
                counts[w] for w, _ in self.nbrs[u] if toward[w] == toward[u] - self.half
            )
        return int(counts[a])

    def paths(self, a: int, b: int) -> List[Tuple[int, ...]]:
        """All geodesics from J index ``a`` to ``b`` in deterministic order."""
        n_paths = self.count_paths(a, b)
        if n_paths > self.cap:
            raise CapExceeded(
                f"{n_paths} geodesics between {self.gm.j_point(a)} and {self.gm.j_point(b)} "
                f"exceed the cap of {self.cap}"
            )
        toward = self.dj[:, b]
        out: List[Tuple[int, ...]] = []
        path = [a]

        def walk(u: int) -> None:
            if u == b:
                out.append(tuple(path))
                return
            for w, _ in self.nbrs[u]:
                if toward[w] == toward[u] - self.half:
                    path.append(w)
                    walk(w)
                    path.pop()

        walk(a)
        return out

    def fine_nodes(self, jpath: Sequence[int]) -> List[int]:
        nodes = [int(self.jn[jpath[0]])]
        for u, w in zip(jpath, jpath[1:]):
            interior = next(inner for x, inner in self.nbrs[u] if x == w)
            nodes.extend(interior)
            nodes.append(int(self.jn[w]))
        return nodes

    def side(self, a: int, b: int):
        """Geodesics between ``a <= b`` with their grid nodes and distance profiles."""
        key = (a, b)
        hit = self._cache.get(key)
        if hit is None:
            jpaths = self.paths(a, b)
            P = np.array([self.fine_nodes(p) for p in jpaths], dtype=np.int64)
            # distance from every grid node to each geodesic
            DV = self.gm.dist[:, P].min(axis=2).T.copy()
            hit = (jpaths, P, DV)
            self._cache[key] = hit
        return hit

    def geodesic(self, jpath: Sequence[int]) -> Geodesic:
        pts = tuple(self.gm.j_point(j) for j in jpath)
        length = int(self.dj[jpath[0], jpath[-1]])
        return Geodesic(pts, QuarterLength.from_units(length, self.scale))

    # -- triangles ----------------------------------------------------------------------

    @staticmethod
    def _thinness(P1, DV1, P2, DV2, P3, DV3) -> np.ndarray:
        """delta(T) in grid units for every geodesic choice, shape (n1, n2, n3)."""
        n1, n2, n3 = len(P1), len(P2), len(P3)
        # side xy against yz and zx
        s1 = np.minimum(
            DV2[:, P1].transpose(1, 0, 2)[:, :, None, :],
            DV3[:, P1].transpose(1, 0, 2)[:, None, :, :],
        ).max(axis=-1)
        s2 = np.minimum(
            DV1[:, P2][:, :, None, :],
            DV3[:, P2].transpose(1, 0, 2)[None, :, :, :],
        ).max(axis=-1)
        s3 = np.minimum(
            DV1[:, P3][:, None, :, :],
            DV2[:, P3][None, :, :, :],
        ).max(axis=-1)
        out = np.maximum(np.maximum(s1, s2), s3)
        assert out.shape == (n1, n2, n3)
        return out

    def triple(self, a: int, b: int, c: int) -> Tuple[int, Tuple[int, int, int], int]:
        """Best geodesic choice for corners ``a <= b <= c``.

        Returns ``(value, (i, j, k), n_triangles)`` with ``(i, j, k)`` the
        lexicographically first maximizer among geodesic indices of the sides
        ``[ab]``, ``[bc]`` and ``[ca]``.
        """
        _, P1, DV1 = self.side(a, b)
        _, P2, DV2 = self.side(b, c)
        _, P3, DV3 = self.side(a, c)
        n1, n2, n3 = len(P1), len(P2), len(P3)
        width = max(P1.shape[1], P2.shape[1], P3.shape[1])
        step = max(1, _MAX_TENSOR // max(1, n2 * n3 * width))
        best, arg = -1, (0, 0, 0)
        for lo in range(0, n1, step):
            T = self._thinness(P1[lo:lo + step], DV1[lo:lo + step], P2, DV2, P3, DV3)
            flat = int(T.argmax())
            val = int(T.flat[flat])
            if val > best:
                i, j, k = np.unravel_index(flat, T.shape)
                best, arg = val, (lo + int(i), int(j), int(k))
        return best, arg, n1 * n2 * n3

    def witness(self, a: int, b: int, c: int, ijk: Tuple[int, int, int]):
        i, j, k = ijk
        p_ab, p_bc, p_ac = self.side(a, b)[0][i], self.side(b, c)[0][j], self.side(a, c)[0][k]
        sides = [self.fine_nodes(p) for p in (p_ab, p_bc, p_ac)]
        value, point = -1, None
        for s in range(3):
            others = [sides[t] for t in range(3) if t != s]
            for node in sides[s]:
                d = min(int(self.gm.dist[node, others[0]].min()), int(self.gm.dist[node, others[1]].min()))
                if d > value or (d == value and node < point):
                    value, point = d, node
        tri = GeodesicTriangle(
            (self.gm.j_point(a), self.gm.j_point(b), self.gm.j_point(c)),
            (self.geodesic(p_ab), self.geodesic(p_bc), self.geodesic(p_ac[::-1])),
        )
        return value, tri, self.gm.point(point)

    def triangle_value(self, jpaths: Sequence[Sequence[int]]) -> Tuple[int, int]:
        """delta(T) for explicit J-index sides, returned as (units, witness node)."""
        sides = [self.fine_nodes(p) for p in jpaths]
        value, point = -1, None
        for s in range(3):
            others = [sides[t] for t in range(3) if t != s]
            for node in sides[s]:
                d = min(int(self.gm.dist[node, others[0]].min()), int(self.gm.dist[node, others[1]].min()))
                if d > value or (d == value and node < point):
                    value, point = d, node
        return value, point


def _scan(engine: _Engine, triples: Sequence[Tuple[int, int, int]], lower: int, upper: Optional[int]):
    """Lexicographic scan with the pruning rules; returns (best, triple, ijk, examined)."""
    dj = engine.dj
    best, where, examined = None, None, 0
    for a, b, c in triples:
        bound = max(dj[a, b], dj[b, c], dj[a, c]) // 2
        if bound < lower or (best is not None and bound <= best[0]):
            continue
        val, ijk, cnt = engine.triple(a, b, c)
        examined += cnt
        if best is None or val > best[0]:
            best, where = (val, ijk), (a, b, c)
            if upper is not None and val >= upper:
                break
    if best is None:
        return None, None, None, examined
    return best[0], where, best[1], examined


def _scan_chunk(args):
    graph, scale, cap, triples, lower, upper = args
    engine = _Engine(graph, scale, cap)
    return _scan(engine, triples, lower, upper)


def _trivial_result(engine: _Engine, examined: int = 0) -> DeltaResult:
    v = GraphPoint.at_vertex(0, engine.scale)
    g = Geodesic((v,), QuarterLength(0))
    return DeltaResult(QuarterLength(0), GeodesicTriangle((v, v, v), (g, g, g)), v, examined)


def _block_j_indices(graph: MetricGraph, edges) -> List[int]:
    verts = sorted({v for e in edges for v in e})
    return verts + sorted(graph.n + graph.edge_id(*e) for e in edges)


def delta_exact(
    graph: MetricGraph,
    *,
    geodesic_cap: Optional[int] = None,
    triple_budget: Optional[int] = None,
    workers: Optional[int] = None,
    decompose: bool = True,
    use_bounds: bool = True,
    scale: int = 4,
) -> DeltaResult:
    """Exact hyperbolicity constant of ``graph``.

    With ``decompose`` the search runs block by block and returns the maximum,
    which is exact because delta is the supremum over any T-decomposition.
    ``use_bounds`` prunes with the girth/cycle lower bound and stops once the
    circumference/diameter upper bound is met; verification code turns it off
    so that those theorems are checked rather than assumed.  Triangles whose
    longest side is at most twice the current best are always skipped, since
    every point of a side is within half its length of one of its endpoints.

    The witness is the lexicographically first maximizer over (corner triple,
    geodesic indices, grid node id), independent of ``workers``.
    """
    budget = default_triple_budget() if triple_budget is None else triple_budget
    workers = default_workers() if workers is None else workers
    engine = _Engine(graph, scale, geodesic_cap)
    if graph.m == 0:
        return _trivial_result(engine)

    if decompose:
        blocks = [comp for comp in t_decomposition(graph).components if len(comp) >= 3]
        groups = [(_block_j_indices(graph, comp), comp) for comp in blocks]
    else:
        groups = [(list(range(graph.n + graph.m)), graph.edges)]

    total = sum(len(js) * (len(js) + 1) * (len(js) + 2) // 6 for js, _ in groups)
    if total > budget:
        raise BudgetExceeded(f"{total} corner triples exceed the budget of {budget}")

    units_per_quarter = scale // 4
    best = None  # (value, triple, ijk)
    examined = 0
    for js, edges in groups:
        lower, upper = 0, None
        if use_bounds:
            if decompose:
                from .graph import induced_on_edges

                sub, _ = induced_on_edges(edges)
            else:
                sub = graph
            bounds = delta_bounds(sub)
            lower = bounds.lower.quarters * units_per_quarter
            upper = bounds.upper.quarters * units_per_quarter
            if best is not None and upper <= best[0]:
                continue
        triples = list(combinations_with_replacement(js, 3))
        if workers > 1 and len(triples) > 64:
            size = -(-len(triples) // (4 * workers))
            chunks = [triples[i:i + size] for i in range(0, len(triples), size)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(
                    _scan_chunk,
                    [(graph, scale, engine.cap, ch, lower, upper) for ch in chunks],
                ))
            val, where, ijk = None, None, None
            for v, w, i, cnt in results:
                examined += cnt
                if v is not None and (val is None or v > val):
                    val, where, ijk = v, w, i
        else:
            val, where, ijk, cnt = _scan(engine, triples, lower, upper)
            examined += cnt
        if val is not None and (best is None or val > best[0]):
            best = (val, where, ijk)

    if best is None:
        return _trivial_result(engine, examined)
    val, (a, b, c), ijk = best
    wval, tri, point = engine.witness(a, b, c, ijk)
    assert wval == val
    return DeltaResult(QuarterLength.from_units(val, scale), tri, point, examined)


def enumerate_geodesics(
    graph: MetricGraph, x: GraphPoint, y: GraphPoint, cap: Optional[int] = None
) -> List[Geodesic]:
    """Every geodesic from ``x`` to ``y`` (both in J(G)), in deterministic order.

    Raises CapExceeded when there are more than ``cap`` of them.
    """
    engine = _Engine(graph, 4, cap)
    a, b = engine.gm.j_index_of(x), engine.gm.j_index_of(y)
    return [engine.geodesic(p) for p in engine.paths(a, b)]


def delta_of_triangle(
    graph: MetricGraph, triangle: GeodesicTriangle, scale: int = 4
) -> Tuple[QuarterLength, GraphPoint]:
    """Sharp thinness constant of one geodesic triangle and a point realizing it.

    The value is the largest distance from a grid point of one side to the
    union of the other two sides; the smallest grid node id wins ties.
    """
    engine = _Engine(graph, scale)
    jpaths = [[engine.gm.j_index_of(p) for p in side.points] for side in triangle.sides]
    for p in jpaths:
        for u, w in zip(p, p[1:]):
            if all(x != w for x, _ in engine.nbrs[u]):
                raise ValueError("consecutive side points must be half an edge apart")
    units, node = engine.triangle_value(jpaths)
    return QuarterLength.from_units(units, scale), engine.gm.point(node)


def triangle_thinness_units(graph: MetricGraph, triangle: GeodesicTriangle, scale: int) -> int:
    """delta(T) in ``1/scale`` units; used to compare grid resolutions."""
    engine = _Engine(graph, scale)
    jpaths = [[engine.gm.j_index_of(p) for p in side.points] for side in triangle.sides]
    return engine.triangle_value(jpaths)[0]


def delta_bounds(graph: MetricGraph) -> ValueInterval:
    """Cheap interval for delta(G) from girth, cycles, circumference and diameters."""
    if graph.is_tree():
        return ValueInterval.exact_value(QuarterLength(0), "tree: delta = 0")
    g = girth_edges(graph)
    c = circumference_edges(graph)
    tags = [f"girth/4 = {QuarterLength(g)}"]
    lower = g
    cyc = shortest_cycle_at_least(graph, 4)
    if cyc is not None:
        L = len(cyc.vertices)
        tags.append(f"shortest cycle of length >= 4 gives {QuarterLength(L)}")
        lower = max(lower, L)
    rep = diameters(graph)
    ups = {
        f"circumference/4 = {QuarterLength(c)}": c,
        f"diam/2 = {QuarterLength(rep.diam_metric.quarters // 2)}": rep.diam_metric.quarters // 2,
        f"diameff/2 = {QuarterLength(rep.diam_effective.quarters // 2)}": rep.diam_effective.quarters // 2,
    }
    upper = min(ups.values())
    tags.extend(ups)
    return ValueInterval(QuarterLength(lower), QuarterLength(upper), tuple(tags))


def is_delta_one(graph: MetricGraph) -> bool:
    """delta(G) = 1 exactly when the effective diameter is 2."""
    return diameters(graph).diam_effective.quarters == 8
