"""Check the closed forms and graph-level theorems against exhaustive enumeration.

Every delta here is computed with ``use_bounds=False`` so that the bounds being
verified are never used to prune the search that verifies them.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .enumeration import EnumerationQuery, enumerate_graphs
from .extremal import (
    EDGE,
    VERTEX,
    Triplet,
    _require,
    a_bounds,
    alpha_bounds,
    b_value,
    beta_value,
    e_admissible,
    v_admissible,
)
from .graph import MetricGraph, format_edge_list, induced_on_edges
from .hyperbolicity import delta_exact, is_delta_one
from .lengths import QuarterLength, ValueInterval
from .metric import diameters
from .structure import circumference_edges, girth_edges, shortest_cycle_at_least, t_decomposition

CONSISTENT, MISMATCH = "consistent", "mismatch"


def _delta_units(graph: MetricGraph) -> int:
    return delta_exact(graph, use_bounds=False, workers=1).value.quarters


def _pmap(fn: Callable, items: Sequence, workers: int) -> List:
    """Order-preserving map, in a process pool when ``workers > 1``."""
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


# -- empirical extremal values -----------------------------------------------------------

@dataclass(frozen=True)
class ClassMember:
    graph: MetricGraph
    girth: int
    circumference: int
    delta: QuarterLength


_TABLES: Dict[Tuple[str, int, bool], Tuple[ClassMember, ...]] = {}


def _profile(graph: MetricGraph) -> Tuple[int, int, int]:
    return girth_edges(graph), circumference_edges(graph), _delta_units(graph)


def class_table(mode: str, count: int, workers: int = 1, allow_large: bool = False) -> Tuple[ClassMember, ...]:
    """Every graph with a cycle and ``count`` vertices (or edges), with g, c and delta.

    Cached per ``(mode, count)``; members appear in enumeration order.
    """
    key = (mode, count, allow_large)
    if key not in _TABLES:
        if mode == VERTEX:
            q = EnumerationQuery(vertex_count=count, allow_large=allow_large)
        else:
            q = EnumerationQuery(edge_count=count, allow_large=allow_large)
        graphs = [g for g in enumerate_graphs(q) if not g.is_tree()]
        profiles = _pmap(_profile, graphs, workers)
        _TABLES[key] = tuple(
            ClassMember(G, gg, cc, QuarterLength(d)) for G, (gg, cc, d) in zip(graphs, profiles)
        )
    return _TABLES[key]


@dataclass(frozen=True)
class EmpiricalReport:
    triplet: Triplet
    class_size: int
    empirical_min: Optional[QuarterLength]
    empirical_max: Optional[QuarterLength]
    formula_lower: ValueInterval     # A or alpha
    formula_upper: QuarterLength     # B or beta
    verdict: str
    min_witness: str = ""
    max_witness: str = ""
    notes: Tuple[str, ...] = field(default=())

    @property
    def consistent(self) -> bool:
        return self.verdict == CONSISTENT

    def summary(self) -> str:
        t = self.triplet
        names = ("A", "B") if t.mode == VERTEX else ("alpha", "beta")
        lo = self.empirical_min.describe() if self.empirical_min else "-"
        hi = self.empirical_max.describe() if self.empirical_max else "-"
        return (
            f"{t.mode} (g={t.g}, c={t.c}, count={t.count}): {self.class_size} graphs; "
            f"empirical min {lo}, max {hi}; {names[0]} in {self.formula_lower}, "
            f"{names[1]} = {self.formula_upper}: {self.verdict}"
        )


def empirical_extremal(
    mode: str, g: int, c: int, count: int, workers: int = 1, allow_large: bool = False
) -> EmpiricalReport:
    """Min and max delta over the whole class, compared with the extremal formulas.

    The verdict is consistent when the maximum equals B (or beta) exactly and
    the minimum lies in the A (or alpha) interval.
    """
    _require(mode, g, c, count)
    t = Triplet(mode, g, c, count)
    members = [x for x in class_table(mode, count, workers, allow_large) if (x.girth, x.circumference) == (g, c)]
    if mode == VERTEX:
        lower_iv, upper_v = a_bounds(g, c, count), b_value(g, c, count)
    else:
        lower_iv, upper_v = alpha_bounds(g, c, count), beta_value(g, c, count)
    if not members:
        return EmpiricalReport(t, 0, None, None, lower_iv, upper_v, MISMATCH,
                               notes=("admissible triplet but the enumerated class is empty",))
    lo = min(members, key=lambda x: x.delta.quarters)
    hi = max(members, key=lambda x: x.delta.quarters)
    notes = []
    if hi.delta != upper_v:
        notes.append(f"empirical max {hi.delta} differs from formula {upper_v}")
    if lo.delta not in lower_iv:
        notes.append(f"empirical min {lo.delta} outside {lower_iv}")
    return EmpiricalReport(
        t,
        len(members),
        lo.delta,
        hi.delta,
        lower_iv,
        upper_v,
        MISMATCH if notes else CONSISTENT,
        format_edge_list(lo.graph),
        format_edge_list(hi.graph),
        tuple(notes),
    )


def admissible_triplets(mode: str, max_count: int, min_count: int = 3) -> List[Tuple[int, int, int]]:
    """All admissible ``(g, c, count)`` with ``count <= max_count``, sorted."""
    test = v_admissible if mode == VERTEX else e_admissible
    return [
        (g, c, k)
        for k in range(min_count, max_count + 1)
        for g in range(3, k + 1)
        for c in range(g, k + 1)
        if test(g, c, k)
    ]


def sweep(mode: str, max_count: int, workers: int = 1) -> List[EmpiricalReport]:
    """Reports for every admissible triplet up to ``max_count``, in sorted order."""
    return [empirical_extremal(mode, g, c, k, workers) for g, c, k in admissible_triplets(mode, max_count)]


CSV_COLUMNS = ("mode", "g", "c", "count", "empirical_min", "empirical_max", "formula_lower", "formula_upper", "verdict")


def _interval_text(iv: ValueInterval) -> str:
    return str(iv.lower) if iv.exact else f"{iv.lower}..{iv.upper}"


def csv_row(rep: EmpiricalReport) -> Tuple[str, ...]:
    t = rep.triplet
    return (
        t.mode, str(t.g), str(t.c), str(t.count),
        "" if rep.empirical_min is None else str(rep.empirical_min),
        "" if rep.empirical_max is None else str(rep.empirical_max),
        _interval_text(rep.formula_lower),
        str(rep.formula_upper),
        rep.verdict,
    )


# -- invariant suite ---------------------------------------------------------------------

INVARIANTS = (
    "sandwich",
    "quarter-grid",
    "block-maximum",
    "half-diameter",
    "half-effective-diameter",
    "delta-one",
    "long-cycle-lower-bound",
    "diameter-two",
)


@dataclass(frozen=True)
class Violation:
    invariant: str
    detail: str
    edge_list: str


def check_graph(graph: MetricGraph) -> List[Violation]:
    """Run every invariant on one graph and return the failures."""
    out: List[Violation] = []

    def fail(name: str, detail: str) -> None:
        out.append(Violation(name, detail, format_edge_list(graph)))

    res = delta_exact(graph, use_bounds=False, decompose=False)
    d = res.value.quarters
    g, c = girth_edges(graph), circumference_edges(graph)
    if g is None:
        if d != 0:
            fail("sandwich", f"tree with delta {res.value}")
    elif not g <= d <= c:
        fail("sandwich", f"delta {res.value} outside [{g}/4, {c}/4]")

    fine = delta_exact(graph, use_bounds=False, decompose=False, scale=8).value.quarters
    if fine != d:
        fail("quarter-grid", f"1/4 grid gives {res.value}, 1/8 grid gives {QuarterLength(fine)}")

    blocks = [induced_on_edges(comp)[0] for comp in t_decomposition(graph).components]
    per_block = max((delta_exact(b, use_bounds=False, decompose=False).value.quarters for b in blocks), default=0)
    if per_block != d:
        fail("block-maximum", f"whole graph {res.value}, max over blocks {QuarterLength(per_block)}")

    rep = diameters(graph)
    if 2 * d > rep.diam_metric.quarters:
        fail("half-diameter", f"delta {res.value} > diam {rep.diam_metric} / 2")
    if 2 * d > rep.diam_effective.quarters:
        fail("half-effective-diameter", f"delta {res.value} > diameff {rep.diam_effective} / 2")
    if (d == 4) != is_delta_one(graph):
        fail("delta-one", f"delta {res.value} but diameff {rep.diam_effective}")
    cyc = shortest_cycle_at_least(graph, 4)
    if cyc is not None and d < len(cyc.vertices):
        fail("long-cycle-lower-bound", f"delta {res.value} below shortest long cycle {len(cyc.vertices)}/4")
    if (rep.diam_metric.quarters <= 8) != rep.vertex_edge_within_one:
        fail("diameter-two", f"diam {rep.diam_metric} but vertex-edge predicate {rep.vertex_edge_within_one}")
    return out


@dataclass(frozen=True)
class SuiteReport:
    graphs_checked: int
    violations: Tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def counts(self) -> Dict[str, int]:
        out = {name: 0 for name in INVARIANTS}
        for v in self.violations:
            out[v.invariant] += 1
        return out


def theorem_suite(
    query: Optional[EnumerationQuery] = None,
    graphs: Optional[Iterable[MetricGraph]] = None,
    workers: int = 1,
) -> SuiteReport:
    """Check all invariants over the enumerated graphs (or an explicit list)."""
    if graphs is None:
        if query is None:
            raise ValueError("give a query or a list of graphs")
        graphs = enumerate_graphs(query)
    graphs = list(graphs)
    results = _pmap(check_graph, graphs, workers)
    return SuiteReport(len(graphs), tuple(v for vs in results for v in vs))
