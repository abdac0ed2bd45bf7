"""Chains of cycles glued along shared paths.

Each cycle C_j shares the path A_j with C_{j-1} and A_{j+1} with C_{j+1}.  The
construction keeps geodesics between points of one cycle inside it, and delta
stays below simple bounds in the path lengths.  These chains realize the small
delta values behind the upper bounds on A and alpha.
"""
from hyperdelta import ChainSpec, ConstraintViolationError, build_chain, delta_exact
from hyperdelta.structure import circumference_edges, girth_edges

specs = [
    ChainSpec(1, [1], [4, 3]),
    ChainSpec(2, [1, 1], [5, 2, 5], [2]),
    ChainSpec(3, [1, 1, 1], [2, 2, 5, 4], [2, 1]),
    ChainSpec(2, [2, 3], [4, 3, 5], [1]),
]
for spec in specs:
    layout = build_chain(spec)
    g = layout.graph
    d = delta_exact(g).value
    unit = spec.unit_rung_bound()
    print(f"alpha={spec.alpha} beta={spec.beta} beta'={spec.betap}")
    print(f"  n={g.n} m={g.m} girth={girth_edges(g)} circumference={circumference_edges(g)}"
          f" cycle lengths={spec.cycle_lengths}")
    print(f"  delta = {d}; general bound {spec.general_bound()}"
          + (f"; unit-rung bound {unit}" if unit is not None else ""))

print("\nA shared path must be strictly shorter than the detour around the")
print("neighbouring cycle, otherwise geodesics could leave their cycle:")
try:
    ChainSpec(1, [3], [1, 1])
except ConstraintViolationError as exc:
    print("  rejected:", exc)
