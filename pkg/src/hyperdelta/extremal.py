"""Extremal hyperbolicity over graphs with prescribed girth and circumference.

For girth ``g``, circumference ``c`` and order ``n`` (vertex mode) or size ``m``
(edge mode):

* ``A(g, c, n)`` / ``B(g, c, n)`` are the min / max of delta over G(g, c, n),
  the connected graphs with those parameters and ``n`` vertices;
* ``alpha(g, c, m)`` / ``beta(g, c, m)`` are the same over H(g, c, m), graphs
  with ``m`` edges.

B and beta have closed forms.  A and alpha are exact in a few families and
otherwise bracketed by the best applicable construction.  Every threshold is
compared in integers scaled to clear the fractions, and all values are
:class:`QuarterLength`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import NotAdmissibleError
from .lengths import QuarterLength, ValueInterval

VERTEX, EDGE = "vertex", "edge"
QUANTITIES = ("A", "B", "alpha", "beta")
_MODE_OF = {"A": VERTEX, "B": VERTEX, "alpha": EDGE, "beta": EDGE}


@dataclass(frozen=True)
class Triplet:
    mode: str
    g: int
    c: int
    count: int

    def __post_init__(self) -> None:
        if self.mode not in (VERTEX, EDGE):
            raise ValueError(f"mode must be 'vertex' or 'edge', got {self.mode!r}")
        if not 3 <= self.g <= self.c <= self.count:
            raise ValueError(f"need 3 <= g <= c <= count, got {self.g}, {self.c}, {self.count}")

    def scaled(self, r: int) -> "Triplet":
        return Triplet(self.mode, r * self.g, r * self.c, r * self.count)


@dataclass(frozen=True)
class BoundaryTriple:
    """The unique ``(a1, a2, a3)`` with ``a1+a2 = g`` and ``a2+a3 = c``.

    In vertex mode ``a1+a2+a3 = n+1``; in edge mode ``a1+a2+a3 = m``.  When the
    ordering flags hold, the theta graph on these lengths lies in the class.
    """

    a1: int
    a2: int
    a3: int
    a1_le_a2: bool
    a2_le_a3: bool
    a2_le_3a1: bool


@dataclass(frozen=True)
class BoundCaseParams:
    """Case parameters of the chain constructions bounding A and alpha."""

    r: Optional[int] = None
    s: Optional[int] = None
    u: Optional[int] = None


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# -- admissibility -----------------------------------------------------------------------

def v_admissible(g: int, c: int, n: int) -> bool:
    """G(g, c, n) is non-empty."""
    if not 3 <= g <= c <= n:
        return False
    return g == c or 2 * n >= 2 * g - 2 + c


def e_admissible(g: int, c: int, m: int) -> bool:
    """H(g, c, m) is non-empty.

    For ``g < c`` a second cycle needs an edge off the longest one, so besides
    ``2m >= 2g + c`` we need ``m >= c + 1``.
    """
    if not 3 <= g <= c <= m:
        return False
    return g == c or (m >= c + 1 and 2 * m >= 2 * g + c)


def admissible(t: Triplet) -> bool:
    test = v_admissible if t.mode == VERTEX else e_admissible
    return test(t.g, t.c, t.count)


def _require(mode: str, g: int, c: int, count: int) -> None:
    ok = v_admissible(g, c, count) if mode == VERTEX else e_admissible(g, c, count)
    if not ok:
        what = "vertices" if mode == VERTEX else "edges"
        raise NotAdmissibleError(f"no graph has girth {g}, circumference {c} and {count} {what}")


def boundary_triple(t: Triplet) -> BoundaryTriple:
    g, c, x = t.g, t.c, t.count
    if t.mode == VERTEX:
        a1, a2, a3 = x - c + 1, g + c - x - 1, x - g + 1
    else:
        a1, a2, a3 = x - c, g + c - x, x - g
    return BoundaryTriple(a1, a2, a3, a1 <= a2, a2 <= a3, a2 <= 3 * a1)


# -- closed forms ----------------------------------------------------------------------

def _b_interval(g: int, c: int, n: int) -> ValueInterval:
    _require(VERTEX, g, c, n)
    edges = n if g == c else n + 1
    if g == c:
        return ValueInterval.exact_value(QuarterLength(c), "B: g = c gives c/4", lower_witness_edges=edges, upper_witness_edges=edges)
    if 4 * n >= 4 * c - 4 + g:
        return ValueInterval.exact_value(
            QuarterLength(c), "B: n >= c-1+g/4 gives c/4", lower_witness_edges=edges, upper_witness_edges=edges
        )
    return ValueInterval.exact_value(
        QuarterLength(4 * (n + 1) - g - 3 * c),
        "B: n < c-1+g/4 gives n+1-(g+3c)/4",
        lower_witness_edges=edges,
        upper_witness_edges=edges,
    )


def _beta_interval(g: int, c: int, m: int) -> ValueInterval:
    _require(EDGE, g, c, m)
    if g == c:
        return ValueInterval.exact_value(QuarterLength(c), "beta: g = c gives c/4")
    if 4 * m >= 4 * c + g:
        return ValueInterval.exact_value(QuarterLength(c), "beta: m >= c+g/4 gives c/4")
    return ValueInterval.exact_value(QuarterLength(4 * m - g - 3 * c), "beta: m < c+g/4 gives m-(g+3c)/4")


def b_value(g: int, c: int, n: int) -> QuarterLength:
    """Largest delta over G(g, c, n)."""
    return _b_interval(g, c, n).lower


def beta_value(g: int, c: int, m: int) -> QuarterLength:
    """Largest delta over H(g, c, m)."""
    return _beta_interval(g, c, m).lower


# -- chain-construction cases shared by A and alpha -------------------------------------

def trichotomy_params(g: int, c: int) -> BoundCaseParams:
    """``r`` and ``s`` locating ``c`` in the chain families when ``c > 3g - 4``."""
    if c <= 3 * g - 4:
        return BoundCaseParams()
    r = _ceil_div(c - 2 * g + 2, g - 2) - 1
    s = _ceil_div(c - 2 * g + 2 - r * (g - 2), 2 * (r + 1)) - 1
    return BoundCaseParams(r=r, s=s)


@dataclass(frozen=True)
class _Bound:
    quarters: int
    tag: str
    rungs: Optional[int] = None  # chain edges beyond c, None when no single construction


def _chain_cases(g: int, c: int, max_rungs: Optional[int]) -> List[_Bound]:
    """Upper bounds from theta and chain constructions in G(g, c, c).

    A chain with ``r + 1`` unit rungs has ``c + r + 1`` edges; ``max_rungs``
    limits ``r + 1`` (edge mode) or is None (vertex mode, any number allowed).
    """
    out: List[_Bound] = []
    if 2 * g - 2 <= c < 3 * g - 4:
        s = c - 2 * g + 2
        out.append(_Bound(g + 2 + s, f"theta(1,g-1,g-1+s) with s={s} gives (g+2+s)/4", 1))
    r = 1
    while 2 * g - 2 + r * (g - 2) <= c:
        if max_rungs is not None and r + 1 > max_rungs:
            break
        base = 2 * g - 2 + r * (g - 2)
        if g % 2 == 0:
            if c == base:
                out.append(_Bound(g + 2, f"chain with r={r} equal-length cycles gives (g+2)/4", r + 1))
            else:
                s = max(0, _ceil_div(c - base, 2 * (r + 1)) - 1)
                out.append(_Bound(g + 4 + 2 * s, f"chain with r={r}, s={s} gives (g+4+2s)/4", r + 1))
        else:
            if c <= base + 1:
                out.append(_Bound(g + 3, f"chain with r={r} near-equal cycles gives (g+3)/4", r + 1))
            else:
                s = max(0, _ceil_div(c - base, 2 * (r + 1)) - 1)
                out.append(_Bound(g + 5 + 2 * s, f"chain with r={r}, s={s} gives (g+5+2s)/4", r + 1))
        r += 1
    return out


def _pick(lower: int, lower_tags: List[str], cands: List[Tuple[int, str, Optional[int]]]) -> ValueInterval:
    """Minimum upper bound; ties prefer a candidate with a known witness (fewest edges)."""
    best = min(q for q, _, _ in cands)
    upper = max(best, lower)
    winners = [w for q, _, w in cands if q == best and w is not None]
    tags = list(lower_tags)
    for qv, tag, _ in sorted(cands, key=lambda t: (t[0], t[1])):
        mark = "*" if qv == best else " "
        tags.append(f"{mark} upper {QuarterLength(qv)}: {tag}")
    return ValueInterval(
        QuarterLength(lower),
        QuarterLength(upper),
        tuple(tags),
        upper_witness_edges=min(winners) if winners else None,
    )


# -- A(g, c, n) ---------------------------------------------------------------------------

def a_bounds(g: int, c: int, n: int) -> ValueInterval:
    """Interval containing the least delta over G(g, c, n).

    ``upper_witness_edges`` records the size of a member reaching the upper
    bound, which the subdivision rule of :func:`refine` consumes.
    """
    _require(VERTEX, g, c, n)
    pad = n - c  # pendant edges to reach n vertices from a construction on c vertices
    if g == c:
        return ValueInterval.exact_value(QuarterLength(c), "A: g = c gives c/4", upper_witness_edges=n)
    if g == 3:
        return ValueInterval.exact_value(
            QuarterLength(4), "A: g = 3 < c; complete graph K_c gives 1 and cycles of length >= 4 force 1",
            upper_witness_edges=c * (c - 1) // 2 + pad,
        )
    if g == 4:
        if c % 2 == 0:
            return ValueInterval.exact_value(
                QuarterLength(4), "A: g = 4, c even; complete bipartite graph gives 1",
                upper_witness_edges=c * c // 4 + pad,
            )
        edges = n + 1 if c == 5 else (c - 1) ** 2 // 4 + 1 + pad
        return ValueInterval.exact_value(
            QuarterLength(5), "A: g = 4, c odd; delta = 1 is impossible and a subdivided bipartite graph gives 5/4",
            upper_witness_edges=edges,
        )
    if g % 4 == 0 and 2 * c == 3 * g and n >= 9 * (g // 4) - 3:
        u = g // 4
        return ValueInterval.exact_value(
            QuarterLength(g), f"A: (g, c) = (4u, 6u) with u={u}, n >= 9u-3; subdivided K_3,3 gives g/4",
            upper_witness_edges=9 * u + n - (9 * u - 3),
        )

    cands: List[Tuple[int, str, Optional[int]]] = [(c, "circumference/4", n + 1)]
    cands.append((b_value(g, c, n).quarters, "A <= B", n + 1))
    for b in _chain_cases(g, c, None):
        cands.append((b.quarters, b.tag, n + b.rungs))
    if c < 3 * g - 4:
        cands.append((2 * g - 1, "c < 3g-4 gives (2g-1)/4", None))
    elif c == 3 * g - 4:
        cands.append((g + 2 if g % 2 == 0 else g + 3, "c = 3g-4 gives (g+2)/4 or (g+3)/4 by parity", None))
    else:
        p = trichotomy_params(g, c)
        eighths = 3 * g + 5 if g % 2 == 0 else 3 * g + 7
        cands.append((eighths // 2, f"c > 3g-4 (r={p.r}, s={p.s}) gives ({eighths}/8) floored to quarters", None))
    if 2 * c >= g * g - 2 * g + 4:
        cands.append((g + 4 if g % 2 == 0 else g + 5, "2c >= g^2-2g+4 gives (g+4)/4 or (g+5)/4 by parity", None))
    return _pick(g, ["lower g/4 from girth"], cands)


# -- alpha(g, c, m) -----------------------------------------------------------------------

def alpha_params(g: int, c: int, m: int) -> BoundCaseParams:
    """``u`` for the unit-rung chain bound: ``min(m - c, (c-g+1) // (g-1))``."""
    return BoundCaseParams(u=min(m - c, (c - g + 1) // (g - 1)))


def alpha_bounds(g: int, c: int, m: int) -> ValueInterval:
    """Interval containing the least delta over H(g, c, m)."""
    _require(EDGE, g, c, m)
    if g == c:
        return ValueInterval.exact_value(QuarterLength(c), "alpha: g = c gives c/4")
    if m == c + 1:
        return ValueInterval.exact_value(
            QuarterLength(c - g + 1 + min(3, g - 1)),
            "alpha: m = c+1 forces theta(1,g-1,c-g+1), giving (c-g+1+min(3,g-1))/4",
        )
    lower, lower_tags = g, ["lower g/4 from girth"]
    if g == 3:
        lower, lower_tags = 4, ["lower 1: a cycle of length >= 4 exists"]
        if 2 * m >= c * (c - 1):
            return ValueInterval.exact_value(QuarterLength(4), "alpha: g = 3, m >= C(c,2); K_c plus pendants gives 1")

    cands: List[Tuple[int, str, Optional[int]]] = [
        (c, "circumference/4", None),
        (beta_value(g, c, m).quarters, "alpha <= beta", None),
    ]
    u = alpha_params(g, c, m).u
    if u >= 2:
        cands.append((5 + _ceil_div(c - g + 1, u), f"unit-rung chain with u={u} gives 5/4 + ceil((c-g+1)/u)/4", None))
    for b in _chain_cases(g, c, m - c):
        cands.append((b.quarters, b.tag, None))
    if g == 3 and m >= c + (c - 2) // 2:
        cands.append((6, "g = 3, m >= c + floor((c-2)/2); ladder chain gives 3/2", None))
    return _pick(lower, lower_tags, cands)


# -- dispatch ---------------------------------------------------------------------------

def extremal_interval(quantity: str, g: int, c: int, count: int) -> ValueInterval:
    """Interval for ``quantity`` in ``{"A", "B", "alpha", "beta"}``."""
    if quantity == "A":
        return a_bounds(g, c, count)
    if quantity == "B":
        return _b_interval(g, c, count)
    if quantity == "alpha":
        return alpha_bounds(g, c, count)
    if quantity == "beta":
        return _beta_interval(g, c, count)
    raise ValueError(f"unknown quantity {quantity!r}; choose from {QUANTITIES}")


# -- propagation rules ------------------------------------------------------------------

Key = Tuple[str, Triplet]


def _tighten(iv: ValueInterval, lower=None, upper=None, tag="", lw=None, uw=None) -> Optional[ValueInterval]:
    new_lo, new_up = iv.lower, iv.upper
    lo_w, up_w = iv.lower_witness_edges, iv.upper_witness_edges
    changed = False
    if lower is not None and lower > new_lo:
        new_lo, lo_w, changed = lower, lw, True
    if upper is not None and upper < new_up:
        new_up, up_w, changed = upper, uw, True
    if not changed:
        return None
    if new_lo > new_up:
        raise ValueError(f"inconsistent bounds: lower {new_lo} exceeds upper {new_up} ({tag})")
    return ValueInterval(new_lo, new_up, iv.provenance + (tag,), lo_w, up_w)


def _label(key: Key) -> str:
    qn, t = key
    return f"{qn}({t.g},{t.c},{t.count})"


def refine(known: Iterable[Tuple[str, Triplet, ValueInterval]]) -> Dict[Key, ValueInterval]:
    """Propagate bounds between entries of a table until nothing changes.

    Rules, for entries sharing a quantity:

    * A and alpha are non-increasing, B and beta non-decreasing in the count;
    * subdividing a witness with ``m1`` edges r times: ``A(rg, rc, n1) <= r A(g, c, n)``
      for ``n1 >= n + (r-1) m1``, and ``B(rg, rc, n2) >= r B(g, c, n)`` likewise;
    * ``alpha(rg, rc, rm) <= r alpha(g, c, m)`` and ``beta(rg, rc, rm) >= r beta(g, c, m)``,
      used in both directions with values rounded to quarters;
    * ``A <= B`` and ``alpha <= beta`` at the same triplet.

    Intervals only ever shrink.  Raises ValueError if the table is inconsistent.
    """
    table: Dict[Key, ValueInterval] = {}
    for qn, t, iv in known:
        if qn not in _MODE_OF or _MODE_OF[qn] != t.mode:
            raise ValueError(f"{qn} is defined on {_MODE_OF.get(qn)} triplets, got {t.mode}")
        key = (qn, t)
        table[key] = iv if key not in table else (_tighten(table[key], iv.lower, iv.upper, "merged") or table[key])

    def update(key: Key, **kw) -> bool:
        new = _tighten(table[key], **kw)
        if new is None:
            return False
        table[key] = new
        return True

    changed = True
    while changed:
        changed = False
        keys = sorted(table, key=lambda k: (k[0], k[1].g, k[1].c, k[1].count))
        for src in keys:
            for dst in keys:
                if src == dst:
                    continue
                qs, ts = src
                qd, td = dst
                S, D = table[src], table[dst]
                tag = f"from {_label(src)}"
                # monotonicity in the count
                if qs == qd and (ts.g, ts.c) == (td.g, td.c) and td.count > ts.count:
                    extra = td.count - ts.count
                    if qs in ("A", "alpha"):
                        uw = None if S.upper_witness_edges is None else S.upper_witness_edges + extra
                        changed |= update(dst, upper=S.upper, tag=f"non-increasing in count, {tag}", uw=uw)
                        changed |= update(src, lower=table[dst].lower, tag=f"non-increasing in count, from {_label(dst)}",
                                          lw=table[dst].lower_witness_edges)
                    else:
                        lw = None if S.lower_witness_edges is None else S.lower_witness_edges + extra
                        changed |= update(dst, lower=S.lower, tag=f"non-decreasing in count, {tag}", lw=lw)
                        changed |= update(src, upper=table[dst].upper, tag=f"non-decreasing in count, from {_label(dst)}",
                                          uw=table[dst].upper_witness_edges)
                # subdivision / scaling
                if qs == qd and td.g % ts.g == 0 and td.g > ts.g:
                    r = td.g // ts.g
                    if td.c != r * ts.c:
                        continue
                    S, D = table[src], table[dst]
                    if qs == "A" and S.upper_witness_edges is not None:
                        if td.count >= ts.count + (r - 1) * S.upper_witness_edges:
                            changed |= update(dst, upper=S.upper * r, tag=f"subdivision by {r}, {tag}",
                                              uw=S.upper_witness_edges * r + td.count - ts.count - (r - 1) * S.upper_witness_edges)
                    elif qs == "B" and S.lower_witness_edges is not None:
                        if td.count >= ts.count + (r - 1) * S.lower_witness_edges:
                            changed |= update(dst, lower=S.lower * r, tag=f"subdivision by {r}, {tag}",
                                              lw=S.lower_witness_edges * r + td.count - ts.count - (r - 1) * S.lower_witness_edges)
                    elif qs == "alpha" and td.count == r * ts.count:
                        changed |= update(dst, upper=S.upper * r, tag=f"scaling by {r}, {tag}")
                        lo = QuarterLength(_ceil_div(table[dst].lower.quarters, r))
                        changed |= update(src, lower=lo, tag=f"scaling by {r}, from {_label(dst)}")
                    elif qs == "beta" and td.count == r * ts.count:
                        changed |= update(dst, lower=S.lower * r, tag=f"scaling by {r}, {tag}")
                        up = QuarterLength(table[dst].upper.quarters // r)
                        changed |= update(src, upper=up, tag=f"scaling by {r}, from {_label(dst)}")
        # min never exceeds max at the same triplet
        for (qn, t) in keys:
            partner = {"A": "B", "alpha": "beta"}.get(qn)
            if partner and (partner, t) in table:
                lo_key, hi_key = (qn, t), (partner, t)
                changed |= update(lo_key, upper=table[hi_key].upper, tag=f"{qn} <= {partner}")
                changed |= update(hi_key, lower=table[lo_key].lower, tag=f"{qn} <= {partner}")
    return table
