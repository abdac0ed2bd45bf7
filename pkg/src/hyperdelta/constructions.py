"""Generators for the graph families used by the extremal bounds.

Vertex numbering is canonical for every generator: cycle order first, then
auxiliary path vertices in the order their paths are listed.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import (
    ConstraintViolationError,
    ConstructionError,
    InvalidSizeError,
    MultiEdgeError,
    NotAdmissibleError,
    OddSizeError,
    OrderViolationError,
    SizeTooSmallError,
)
from .graph import MetricGraph, build_graph
from .lengths import QuarterLength
from .structure import circumference_edges, girth_edges


def cycle(n: int) -> MetricGraph:
    if n < 3:
        raise SizeTooSmallError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> MetricGraph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 1:
        raise SizeTooSmallError(f"a path needs at least 1 vertex, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> MetricGraph:
    if n < 2:
        raise SizeTooSmallError(f"a complete graph needs at least 2 vertices, got {n}")
    return build_graph(n, combinations(range(n), 2))


_BASIC = {"cycle": cycle, "path": path, "complete": complete}


def basic(kind: str, size: int) -> MetricGraph:
    try:
        make = _BASIC[kind]
    except KeyError:
        raise ValueError(f"unknown graph kind {kind!r}; choose from {sorted(_BASIC)}") from None
    return make(size)


# -- theta graphs ------------------------------------------------------------------------

@dataclass(frozen=True)
class ThetaSpec:
    """Three internally disjoint paths of lengths ``a1 <= a2 <= a3`` between two hubs."""

    a1: int
    a2: int
    a3: int

    def __post_init__(self) -> None:
        if min(self.a1, self.a2, self.a3) < 1:
            raise SizeTooSmallError(f"path lengths must be positive: {self}")
        if not self.a1 <= self.a2 <= self.a3:
            raise OrderViolationError(f"need a1 <= a2 <= a3, got {self.a1}, {self.a2}, {self.a3}")
        if self.a1 == 1 and self.a2 == 1:
            raise MultiEdgeError("a1 = a2 = 1 would join the hubs by two edges")

    @property
    def vertex_count(self) -> int:
        return self.a1 + self.a2 + self.a3 - 1

    @property
    def girth(self) -> int:
        return self.a1 + self.a2

    @property
    def circumference(self) -> int:
        return self.a2 + self.a3

    def delta(self) -> QuarterLength:
        """Closed form (a3 + min(a2, 3 a1)) / 4."""
        return QuarterLength(self.a3 + min(self.a2, 3 * self.a1))


def theta(spec: ThetaSpec) -> MetricGraph:
    """Theta graph: the ``a2 + a3`` cycle on ``0 ..``, hubs 0 and ``a3``, then the a1 path.

    Vertices ``0 .. a3`` run along the a3 path, ``a3 .. a2+a3-1, 0`` close the
    a2 path, and the ``a1 - 1`` interior vertices of the short path follow.
    """
    a1, a2, a3 = spec.a1, spec.a2, spec.a3
    L = a2 + a3
    edges = [(i, (i + 1) % L) for i in range(L)]
    chain = [0] + list(range(L, L + a1 - 1)) + [a3]
    edges.extend(zip(chain, chain[1:]))
    return build_graph(L + a1 - 1, edges)


# -- chained cycles ---------------------------------------------------------------------

@dataclass(frozen=True)
class ChainSpec:
    """Parameters of a chain of cycles ``C_0 .. C_k``.

    ``alpha`` has ``k`` entries (the shared paths A_1..A_k), ``beta`` has ``k+1``
    (B_0..B_k) and ``betap`` has ``k-1`` (B'_1..B'_{k-1}).  The absent
    end values alpha_0, alpha_{k+1}, beta'_0 and beta'_k are zero.
    """

    k: int
    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]
    betap: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        object.__setattr__(self, "betap", tuple(self.betap))
        k = self.k
        if k < 1:
            raise SizeTooSmallError(f"a chain needs k >= 1, got {k}")
        if (len(self.alpha), len(self.beta), len(self.betap)) != (k, k + 1, k - 1):
            raise ConstructionError(
                f"k={k} needs {k} alphas, {k + 1} betas and {k - 1} primed betas"
            )
        if min(self.alpha + self.beta + self.betap) < 0:
            raise ConstructionError("path lengths must be non-negative")
        for j in range(1, k + 1):
            if not self.a(j) < self.b(j) + self.a(j + 1) + self.bp(j):
                raise ConstraintViolationError(
                    f"need alpha_{j} < beta_{j} + alpha_{j+1} + beta'_{j} ({self.a(j)} vs "
                    f"{self.b(j) + self.a(j + 1) + self.bp(j)})"
                )
            if not self.a(j) < self.b(j - 1) + self.a(j - 1) + self.bp(j - 1):
                raise ConstraintViolationError(
                    f"need alpha_{j} < beta_{j-1} + alpha_{j-1} + beta'_{j-1} ({self.a(j)} vs "
                    f"{self.b(j - 1) + self.a(j - 1) + self.bp(j - 1)})"
                )

    # padded accessors, zero outside the stored ranges
    def a(self, j: int) -> int:
        return self.alpha[j - 1] if 1 <= j <= self.k else 0

    def b(self, j: int) -> int:
        return self.beta[j]

    def bp(self, j: int) -> int:
        return self.betap[j - 1] if 1 <= j <= self.k - 1 else 0

    def cycle_length(self, j: int) -> int:
        return self.b(j) + self.bp(j) + self.a(j) + self.a(j + 1)

    @property
    def cycle_lengths(self) -> Tuple[int, ...]:
        return tuple(self.cycle_length(j) for j in range(self.k + 1))

    @property
    def total_length(self) -> int:
        return sum(self.alpha) + sum(self.beta) + sum(self.betap)

    def mirrored_second_condition(self) -> bool:
        """The variant ``alpha_j < beta_{j-1} + alpha_{j+1} + beta'_{j-1}`` of the second inequality."""
        return all(
            self.a(j) < self.b(j - 1) + self.a(j + 1) + self.bp(j - 1)
            for j in range(1, self.k + 1)
        )

    def general_bound(self) -> QuarterLength:
        """Upper bound on delta from cycle lengths and the shared paths."""
        terms = [
            self.b(j) + self.bp(j) + max(3 * self.a(j) + self.a(j + 1), self.a(j) + 3 * self.a(j + 1))
            for j in range(self.k + 1)
        ]
        terms += [
            2 * (self.a(j) + self.a(j + 1) + max(self.b(j), self.bp(j)))
            for j in range(1, self.k)
        ]
        return QuarterLength(max(terms))

    def unit_rung_bound(self) -> Optional[QuarterLength]:
        """Sharper bound valid when every shared path has length 1; None otherwise."""
        if any(x != 1 for x in self.alpha):
            return None
        terms = [2 + self.cycle_length(0), 2 + self.cycle_length(self.k)]
        terms += [2 * (2 + max(self.b(j), self.bp(j))) for j in range(1, self.k)]
        return QuarterLength(max(terms))


@dataclass(frozen=True)
class ChainLayout:
    graph: MetricGraph
    cycles: Tuple[FrozenSet[int], ...]
    hubs: Tuple[int, ...]          # p_1..p_k
    hubs_prime: Tuple[int, ...]    # p'_1..p'_k
    cycle_edges: Tuple[FrozenSet[Tuple[int, int]], ...] = ()


class _UnionFind:
    def __init__(self) -> None:
        self.parent: List[int] = []

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[max(x, y)] = min(x, y)


def build_chain(spec: ChainSpec) -> ChainLayout:
    """Glue the paths of ``spec`` into a graph and record each cycle's vertices.

    Hubs p_1..p_k get ids ``0..k-1`` and p'_1..p'_k get ``k..2k-1``; interior
    vertices of A_1..A_k, B_0..B_k, B'_1..B'_{k-1} follow in that order.
    Zero-length paths identify their endpoints, after which ids are compacted
    in increasing order.
    """
    k = spec.k
    uf = _UnionFind()
    for _ in range(2 * k):
        uf.add()
    p = lambda j: j - 1  # noqa: E731
    pp = lambda j: k + j - 1  # noqa: E731

    ends = []
    ends += [(("A", j), p(j), pp(j), spec.a(j)) for j in range(1, k + 1)]
    ends.append((("B", 0), pp(1), p(1), spec.b(0)))
    ends += [(("B", j), p(j), p(j + 1), spec.b(j)) for j in range(1, k)]
    ends.append((("B", k), p(k), pp(k), spec.b(k)))
    ends += [(("Bp", j), pp(j), pp(j + 1), spec.bp(j)) for j in range(1, k)]

    raw_edges: List[Tuple[int, int]] = []
    members: Dict[Tuple[str, int], List[int]] = {}
    for name, x, y, length in ends:
        if length == 0:
            uf.union(x, y)
            members[name] = [x, y]
            continue
        inner = [uf.add() for _ in range(length - 1)]
        nodes = [x] + inner + [y]
        raw_edges.extend(zip(nodes, nodes[1:]))
        members[name] = nodes

    roots = sorted({uf.find(v) for v in range(len(uf.parent))})
    new_id = {r: i for i, r in enumerate(roots)}
    ident = lambda v: new_id[uf.find(v)]  # noqa: E731

    edges = set()
    for u, v in raw_edges:
        a, b = ident(u), ident(v)
        if a == b:
            raise MultiEdgeError("a path of length 1 joins two identified hubs (loop)")
        e = (min(a, b), max(a, b))
        if e in edges:
            raise MultiEdgeError(f"two paths of length 1 join the same pair of hubs {e}")
        edges.add(e)
    graph = build_graph(len(roots), sorted(edges))

    def verts(*names) -> FrozenSet[int]:
        return frozenset(ident(v) for nm in names if nm in members for v in members[nm])

    def path_edges(*names) -> FrozenSet[Tuple[int, int]]:
        out = set()
        for nm in names:
            nodes = [ident(v) for v in members.get(nm, ())]
            out.update((min(a, b), max(a, b)) for a, b in zip(nodes, nodes[1:]) if a != b)
        return frozenset(out)

    names = [(("B", j), ("Bp", j), ("A", j), ("A", j + 1)) for j in range(k + 1)]
    return ChainLayout(
        graph,
        tuple(verts(*nm) for nm in names),
        tuple(ident(p(j)) for j in range(1, k + 1)),
        tuple(ident(pp(j)) for j in range(1, k + 1)),
        tuple(path_edges(*nm) for nm in names),
    )


def chain(spec: ChainSpec) -> MetricGraph:
    return build_chain(spec).graph


# -- bipartite families -----------------------------------------------------------------

def gamma(c: int) -> MetricGraph:
    """Complete bipartite graph on ``c/2 + c/2`` vertices, v_i -> id ``i - 1``.

    Vertices ``v_i`` and ``v_j`` are adjacent when ``i + j`` is odd, so
    ``0, 1, .., c-1, 0`` is a Hamiltonian cycle.
    """
    if c % 2:
        raise OddSizeError(f"needs an even size, got {c}")
    if c < 4:
        raise SizeTooSmallError(f"needs c >= 4, got {c}")
    return build_graph(c, [(i, j) for i, j in combinations(range(c), 2) if (i + j) % 2])


def lambda_(c: int) -> MetricGraph:
    """``gamma(c - 1)`` with its cycle edge ``(0, 1)`` replaced by a path through new vertex ``c - 1``."""
    if c % 2 == 0 or c <= 5:
        raise InvalidSizeError(f"needs an odd size greater than 5, got {c}")
    base = gamma(c - 1)
    edges = [e for e in base.edges if e != (0, 1)] + [(0, c - 1), (1, c - 1)]
    return build_graph(c, edges)


def attach_pendants(graph: MetricGraph, v: int, lengths: Sequence[int]) -> MetricGraph:
    """Glue paths of the given lengths to ``graph`` at vertex ``v``."""
    if not 0 <= v < graph.n:
        raise ConstructionError(f"vertex {v} is not in the graph")
    if any(L < 1 for L in lengths):
        raise SizeTooSmallError("pendant path lengths must be positive")
    edges = list(graph.edges)
    nxt = graph.n
    for L in lengths:
        nodes = [v] + list(range(nxt, nxt + L))
        nxt += L
        edges.extend(zip(nodes, nodes[1:]))
    return build_graph(nxt, edges)


# -- admissibility witnesses --------------------------------------------------------------

def _check_class(graph: MetricGraph, g: int, c: int, n: Optional[int] = None, m: Optional[int] = None) -> MetricGraph:
    got = (girth_edges(graph), circumference_edges(graph), graph.n, graph.m)
    want = (g, c, graph.n if n is None else n, graph.m if m is None else m)
    if got != want:
        raise ConstructionError(f"witness has (g, c, n, m) = {got}, expected {want}")
    return graph


def witness_v(g: int, c: int, n: int) -> MetricGraph:
    """A member of G(g, c, n): girth g, circumference c, n vertices."""
    from .extremal import v_admissible

    if not v_admissible(g, c, n):
        raise NotAdmissibleError(f"no graph has girth {g}, circumference {c} and {n} vertices")
    if g == c:
        G = attach_pendants(cycle(g), 0, [1] * (n - g))
    elif 2 * n <= 2 * c - 2 + g:
        G = theta(ThetaSpec(n - c + 1, g + c - n - 1, n - g + 1))
    else:
        a1 = g // 2
        core = theta(ThetaSpec(a1, g - a1, c - g + a1))
        G = attach_pendants(core, 0, [1] * (n - core.n))
    return _check_class(G, g, c, n=n)


def witness_e(g: int, c: int, m: int) -> MetricGraph:
    """A member of H(g, c, m): girth g, circumference c, m edges."""
    from .extremal import e_admissible

    if not e_admissible(g, c, m):
        raise NotAdmissibleError(f"no graph has girth {g}, circumference {c} and {m} edges")
    if g == c:
        G = attach_pendants(cycle(g), 0, [1] * (m - g))
    elif 2 * m <= 2 * c + g:
        G = theta(ThetaSpec(m - c, g + c - m, m - g))
    else:
        a1 = g // 2
        core = theta(ThetaSpec(a1, g - a1, c - g + a1))
        G = attach_pendants(core, 0, [1] * (m - core.m))
    return _check_class(G, g, c, m=m)
