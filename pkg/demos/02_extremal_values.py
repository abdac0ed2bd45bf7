"""Extremal hyperbolicity over graphs of prescribed girth and circumference.

For fixed girth g and circumference c, how small or large can delta be when the
graph has n vertices (A and B) or m edges (alpha and beta)?  The maxima have
closed forms; the minima are known exactly in some cases and bracketed in
others.  This script prints a few tables and then lets the bound propagation
close one of the open intervals.
"""
from hyperdelta import VERTEX, Triplet, ValueInterval, a_bounds, b_value, q, refine, v_admissible
from hyperdelta import alpha_bounds, beta_value, e_admissible

print("girth 5, circumference 8, growing vertex count")
print(f"{'n':>3}  {'A (min delta)':<16} B (max delta)")
for n in range(8, 14):
    if v_admissible(5, 8, n):
        print(f"{n:>3}  {str(a_bounds(5, 8, n)):<16} {b_value(5, 8, n)}")

print("\ngirth 3, circumference 10, growing edge count")
print(f"{'m':>3}  {'alpha':<16} beta")
for m in range(11, 46, 4):
    if e_admissible(3, 10, m):
        print(f"{m:>3}  {str(alpha_bounds(3, 10, m)):<16} {beta_value(3, 10, m)}")

print("\nWhere each bound comes from, for A(9, 14, 15):")
for tag in a_bounds(9, 14, 15).provenance:
    print("  ", tag)

print("\nSubdividing every edge of a 9-edge graph with girth 4, circumference 6")
print("and delta 1 gives a graph with girth 8, circumference 12 and delta 2.")
print("Feeding that fact to the propagation pins A(8, 12, 15) down exactly:")
small, big = Triplet(VERTEX, 4, 6, 6), Triplet(VERTEX, 8, 12, 15)
table = refine([
    ("A", small, ValueInterval.exact_value(q(1), "enumerated", upper_witness_edges=9)),
    ("A", big, ValueInterval(q(2), q(3), ("girth/4 lower bound",))),
])
print(f"  A(8, 12, 15) = {table['A', big]}  via {table['A', big].provenance[-1]}")
